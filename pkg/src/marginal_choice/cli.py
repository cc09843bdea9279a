"""Command-line front end and file formats.

One JSON dataset format serves every subcommand: ``alternatives`` (array
of labels), ``mu`` (menu key -> probability), ``lambda`` (label ->
probability), plus optional ``outside_option``, ``xi``, and ``feasible``
keys.  Probabilities are decimal or "p/q" strings so parsing is exact.

Exit codes: 0 = verdict positive / object constructed, 1 = verdict
negative (certificate in the report), 2 = usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import availability as avail_mod
from . import core_geometry, flow, ircs, luce, rum, twostage
from .domain import (
    ChoiceDistribution,
    MarginalDataset,
    MenuDistribution,
    PreferenceOrder,
    Universe,
    ZERO,
    parse_probability,
    serialize_dataset,
    validate_dataset,
)
from .errors import (
    DatasetError,
    MarginalChoiceError,
    NoConvergence,
    NotInterior,
    NotRationalizable,
)
from .games import game_from_mu
from .generators import gen_ircs, gen_luce, gen_rum, gen_tsc

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class _Report:
    """Accumulates report fields; renders as text lines or one JSON object."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.data: dict = {}
        self.lines: list[str] = []

    def add(self, key: str, value, text: str | None = None):
        self.data[key] = value
        self.lines.append(text if text is not None else f"{key}: {value}")

    def emit(self, stream=None) -> None:
        stream = stream or sys.stdout
        if self.fmt == "json":
            json.dump(self.data, stream, indent=2, default=str)
            stream.write("\n")
        else:
            for line in self.lines:
                stream.write(line + "\n")


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DatasetError(f"{path} is not valid JSON: {exc}") from exc


def _parse_feasible_arg(universe: Universe, raw: str) -> list[int]:
    menus = []
    for chunk in raw.split(";"):
        chunk = chunk.strip().strip("{}")
        if chunk:
            menus.append(universe.parse_menu(chunk))
    return menus


def _feasible_collection(
    universe: Universe, doc: dict, arg: str | None
) -> twostage.FeasibleCollection:
    if arg is not None:
        menus = _parse_feasible_arg(universe, arg)
    elif "feasible" in doc:
        menus = [universe.parse_menu(key) for key in doc["feasible"]]
    else:
        raise DatasetError(
            "two-stage models need a feasible collection "
            "(--feasible or a 'feasible' key in the file)"
        )
    return twostage.FeasibleCollection(frozenset(menus))


def _star_dataset(doc: dict) -> ircs.StarDataset:
    universe = Universe(tuple(doc["alternatives"]))
    weights = {}
    for key, value in doc["mu"].items():
        mask = universe.parse_menu(key.replace("x*", "").strip(", "))
        weights[mask] = weights.get(mask, ZERO) + parse_probability(value)
    mu_star = MenuDistribution(weights)
    lam = [ZERO] * universe.n
    lam_out = None
    for label, value in doc["lambda"].items():
        if label == "x*":
            lam_out = parse_probability(value)
        else:
            lam[universe.index(label)] = parse_probability(value)
    if lam_out is None:
        lam_out = 1 - sum(lam, ZERO)
    return ircs.StarDataset(universe, mu_star, tuple(lam), lam_out)


def _pi_entries(universe: Universe, pi: dict) -> dict:
    out = {}
    for key, dist in sorted(pi.items()):
        label = universe.menu_label(key) if isinstance(key, int) else str(key)
        out[label] = {
            universe.alternatives[i]: str(dist[i])
            for i in range(universe.n)
            if dist[i] != 0
        }
    return out


def _cmd_check(dataset: MarginalDataset, args, report: _Report) -> int:
    game = game_from_mu(dataset.universe, dataset.mu)
    result = core_geometry.core_contains(game, dataset.lam, dataset.mu)
    universe = dataset.universe
    report.add(
        "rationalizable",
        result.member,
        f"rationalizable: {'yes' if result.member else 'no'}",
    )
    if result.min_slack is not None:
        menu, slack = result.min_slack
        report.add(
            "min_slack",
            {"menu": universe.menu_label(menu), "slack": str(slack)},
            f"min slack {slack} at menu {universe.menu_label(menu)}",
        )
    report.add(
        "violated",
        [
            {"menu": universe.menu_label(m), "deficit": str(d)}
            for m, d in result.violated
        ],
        "violated: "
        + (
            ", ".join(
                f"{universe.menu_label(m)} (deficit {d})"
                for m, d in result.violated
            )
            or "none"
        ),
    )
    report.add(
        "tight",
        [universe.menu_label(m) for m in result.tight],
        "tight: "
        + (", ".join(universe.menu_label(m) for m in result.tight) or "none"),
    )
    return EXIT_OK if result.member else EXIT_NEGATIVE


def _cmd_rationalize(dataset: MarginalDataset, args, report: _Report) -> int:
    result = flow.rationalize(dataset)
    universe = dataset.universe
    report.add(
        "rationalizable",
        result.feasible,
        f"rationalizable: {'yes' if result.feasible else 'no'}",
    )
    if result.feasible:
        entries = _pi_entries(universe, result.pi)
        report.add(
            "pi",
            entries,
            "conditional system:\n"
            + "\n".join(
                f"  {menu}: "
                + ", ".join(f"{a}={p}" for a, p in dist.items())
                for menu, dist in entries.items()
            ),
        )
        return EXIT_OK
    report.add(
        "cut",
        universe.menu_label(result.cut),
        f"violating set: {universe.menu_label(result.cut)}",
    )
    return EXIT_NEGATIVE


def _cmd_rum(dataset: MarginalDataset, args, report: _Report) -> int:
    try:
        nu = rum.rum_rationalize(dataset)
    except NotRationalizable as exc:
        universe = dataset.universe
        report.add("rum_rationalizable", False, "RUM rationalizable: no")
        report.add(
            "violated",
            [
                {"menu": universe.menu_label(m), "deficit": str(d)}
                for m, d in exc.report.violated
            ],
            "violated: "
            + ", ".join(
                f"{universe.menu_label(m)} (deficit {d})"
                for m, d in exc.report.violated
            ),
        )
        return EXIT_NEGATIVE
    report.add("rum_rationalizable", True, "RUM rationalizable: yes")
    entries = {
        order.label(dataset.universe): str(w)
        for order, w in sorted(
            nu.weights.items(), key=lambda kv: kv[0].ranking
        )
    }
    report.add(
        "nu",
        entries,
        "order distribution:\n"
        + "\n".join(f"  {o}: {w}" for o, w in entries.items()),
    )
    report.add(
        "note",
        "one of possibly many rationalizations",
        "note: this is one of possibly many rationalizations",
    )
    return EXIT_OK


def _cmd_luce(dataset: MarginalDataset, args, report: _Report) -> int:
    try:
        inv = luce.luce_invert(dataset, tol=args.tolerance)
    except (NotInterior, NoConvergence) as exc:
        report.add("luce_rationalizable", False, "Luce rationalizable: no")
        report.add("reason", str(exc), f"reason: {exc}")
        return EXIT_NEGATIVE
    universe = dataset.universe
    report.add("luce_rationalizable", True, "Luce rationalizable: yes")
    report.add(
        "u",
        {universe.alternatives[i]: inv.u[i] for i in range(universe.n)},
        "weights: "
        + ", ".join(
            f"{universe.alternatives[i]}={inv.u[i]:.12g}"
            for i in range(universe.n)
        ),
    )
    report.add("residual", inv.residual, f"residual: {inv.residual:.3e}")
    if inv.rational is not None:
        report.add(
            "u_exact",
            {
                universe.alternatives[i]: str(inv.rational[i])
                for i in range(universe.n)
            },
            "exact weights: "
            + ", ".join(
                f"{universe.alternatives[i]}={inv.rational[i]}"
                for i in range(universe.n)
            ),
        )
    return EXIT_OK


def _cmd_ircs(doc: dict, args, report: _Report) -> int:
    dataset = _star_dataset(doc)
    solutions = ircs.ircs_rationalize(dataset)
    universe = dataset.universe
    report.add(
        "ircs_rationalizable",
        bool(solutions),
        f"IRCS rationalizable: {'yes' if solutions else 'no'}",
    )
    entries = [
        {
            "order": sol.order.label(universe),
            "gamma": {
                universe.alternatives[i]: str(sol.gamma[i])
                for i in range(universe.n)
            },
        }
        for sol in solutions
    ]
    report.add(
        "solutions",
        entries,
        "solutions:\n"
        + "\n".join(
            f"  {e['order']}: "
            + ", ".join(f"{a}={g}" for a, g in e["gamma"].items())
            for e in entries
        )
        if entries
        else "solutions: none",
    )
    return EXIT_OK if solutions else EXIT_NEGATIVE


def _cmd_tsc(
    dataset: MarginalDataset, doc: dict, args, report: _Report
) -> int:
    collection = _feasible_collection(dataset.universe, doc, args.feasible)
    verdict = twostage.tsc_rationalize(dataset, collection)
    universe = dataset.universe
    report.add(
        "tsc_rationalizable",
        verdict.rationalizable,
        f"TSC rationalizable: {'yes' if verdict.rationalizable else 'no'}",
    )
    if verdict.redundant_in_support:
        labels = [universe.menu_label(m) for m in verdict.redundant_in_support]
        report.add(
            "redundant_in_support",
            labels,
            "redundant menus in support: " + ", ".join(labels),
        )
    if verdict.core_report is not None and not verdict.core_report.member:
        report.add(
            "violated",
            [
                {"menu": universe.menu_label(m), "deficit": str(d)}
                for m, d in verdict.core_report.violated
            ],
            "violated: "
            + ", ".join(
                f"{universe.menu_label(m)} (deficit {d})"
                for m, d in verdict.core_report.violated
            ),
        )
    if verdict.rationalizable:
        entries = _pi_entries(universe, verdict.witness.pi)
        report.add(
            "pi",
            entries,
            "conditional system:\n"
            + "\n".join(
                f"  {menu}: "
                + ", ".join(f"{a}={p}" for a, p in dist.items())
                for menu, dist in entries.items()
            ),
        )
        return EXIT_OK
    return EXIT_NEGATIVE


def _cmd_pf(
    dataset: MarginalDataset, doc: dict, args, report: _Report
) -> int:
    collection = _feasible_collection(dataset.universe, doc, args.feasible)
    result = twostage.pf_rationalize(dataset, collection)
    universe = dataset.universe
    report.add(
        "verdict", result.verdict.value, f"verdict: {result.verdict.value}"
    )
    if result.nested_in_support:
        labels = [universe.menu_label(m) for m in result.nested_in_support]
        report.add(
            "nested_in_support",
            labels,
            "nested menus in support: " + ", ".join(labels),
        )
    if result.verdict is twostage.PfVerdict.INDETERMINATE:
        labels = [universe.menu_label(m) for m in result.core_report.tight]
        report.add(
            "tight",
            labels,
            "tight constraints on the boundary: " + ", ".join(labels),
        )
    return (
        EXIT_OK
        if result.verdict is twostage.PfVerdict.RATIONALIZABLE
        else EXIT_NEGATIVE
    )


def _cmd_avail(doc: dict, args, report: _Report) -> int:
    universe = Universe(tuple(doc["alternatives"]))
    if "xi" not in doc:
        raise DatasetError("availability analysis needs an 'xi' key")
    xi_probs = [ZERO] * universe.n
    for label, value in doc["xi"].items():
        xi_probs[universe.index(label)] = parse_probability(value)
    xi = avail_mod.AvailabilityVector(tuple(xi_probs))
    lam_probs = [ZERO] * universe.n
    for label, value in doc["lambda"].items():
        lam_probs[universe.index(label)] = parse_probability(value)
    lam = ChoiceDistribution(tuple(lam_probs))
    ok = avail_mod.potentially_rationalizable(xi, lam)
    report.add(
        "potentially_rationalizable",
        ok,
        f"potentially rationalizable: {'yes' if ok else 'no'}",
    )
    if not ok:
        offenders = [
            universe.alternatives[i]
            for i in range(universe.n)
            if lam[i] > xi[i]
        ]
        report.add(
            "overchosen",
            offenders,
            "chosen more often than available: " + ", ".join(offenders),
        )
        return EXIT_NEGATIVE
    mu = avail_mod.construct_mu(universe, xi, lam)
    report.add(
        "mu",
        {universe.menu_label(m): str(w) for m, w in sorted(mu.weights.items())},
        "witness menu distribution:\n"
        + "\n".join(
            f"  {universe.menu_label(m)}: {w}"
            for m, w in sorted(mu.weights.items())
        ),
    )
    return EXIT_OK


def _parse_order(universe: Universe, raw: str) -> PreferenceOrder:
    labels = [part.strip() for part in raw.split(">")]
    return PreferenceOrder(tuple(universe.index(label) for label in labels))


def _cmd_gen(args, report: _Report) -> int:
    doc = _load_json(args.dataset)
    model = doc.get("model")
    universe = Universe(tuple(doc["alternatives"]))
    if model == "rum":
        mu = _menu_distribution(universe, doc["mu"])
        nu = rum.OrderDistribution(
            {
                _parse_order(universe, key): parse_probability(value)
                for key, value in doc["nu"].items()
            }
        )
        dataset = gen_rum(universe, mu, nu)
        payload = serialize_dataset(dataset)
    elif model == "luce":
        mu = _menu_distribution(universe, doc["mu"])
        u = [ZERO] * universe.n
        for label, value in doc["u"].items():
            u[universe.index(label)] = parse_probability(value)
        dataset = gen_luce(universe, mu, luce.LuceWeights(tuple(u)))
        payload = serialize_dataset(dataset)
    elif model == "ircs":
        mu = _menu_distribution(universe, doc["mu"])
        order = _parse_order(universe, doc["order"])
        gamma = [ZERO] * universe.n
        for label, value in doc["gamma"].items():
            gamma[universe.index(label)] = parse_probability(value)
        star = gen_ircs(universe, mu, order, gamma)
        payload = {
            "alternatives": list(universe.alternatives),
            "outside_option": True,
            "mu": {
                universe.menu_label(m): str(w)
                for m, w in sorted(star.mu_star.weights.items())
            },
            "lambda": {
                **{
                    universe.alternatives[i]: str(star.lam[i])
                    for i in range(universe.n)
                },
                "x*": str(star.lam_out),
            },
        }
    elif model == "tsc":
        feasible = [universe.parse_menu(key) for key in doc["feasible"]]
        agents = []
        for entry in doc["agents"]:
            u = [ZERO] * universe.n
            v = [ZERO] * universe.n
            for label, value in entry["u"].items():
                u[universe.index(label)] = Fraction(str(value))
            for label, value in entry["v"].items():
                v[universe.index(label)] = Fraction(str(value))
            agents.append(
                (tuple(u), tuple(v), parse_probability(entry["weight"]))
            )
        dataset = gen_tsc(universe, agents, feasible)
        payload = serialize_dataset(dataset)
        payload["feasible"] = [universe.menu_label(m) for m in feasible]
    else:
        raise DatasetError(f"unknown model {model!r}")
    text = json.dumps(payload, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return EXIT_OK


def _menu_distribution(universe: Universe, raw: dict) -> MenuDistribution:
    weights: dict[int, Fraction] = {}
    for key, value in raw.items():
        mask = universe.parse_menu(key)
        weights[mask] = weights.get(mask, ZERO) + parse_probability(value)
    return MenuDistribution(weights)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="marginal-choice",
        description="Rationalizability tests for marginal stochastic choice data",
    )
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="report format",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("check", "core membership (unrestricted rationalizability)"),
        ("rationalize", "construct a witnessing conditional system"),
        ("rum", "random-utility rationalizability and a witness"),
        ("luce", "Luce weights recovery"),
        ("ircs", "independent random consideration sets"),
        ("tsc", "temptation/self-control (two-stage)"),
        ("pf", "preference for flexibility (two-stage)"),
        ("avail", "availability-only potential rationalizability"),
        ("gen", "generate a dataset from model parameters"),
    ]:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("dataset", help="JSON input file")
        if name in ("tsc", "pf"):
            cmd.add_argument(
                "--feasible",
                help="semicolon-separated feasible menus, e.g. '{a};{a,b}'",
            )
        if name == "luce":
            cmd.add_argument(
                "--tolerance",
                type=float,
                default=luce.DEFAULT_TOL,
                help="residual tolerance for the inversion",
            )
        if name == "gen":
            cmd.add_argument("-o", "--output", help="write the dataset here")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = _Report(args.format)
    try:
        if args.command == "gen":
            return _cmd_gen(args, report)
        if args.command == "avail":
            code = _cmd_avail(_load_json(args.dataset), args, report)
        elif args.command == "ircs":
            code = _cmd_ircs(_load_json(args.dataset), args, report)
        else:
            doc = _load_json(args.dataset)
            dataset = validate_dataset(doc)
            if args.command == "check":
                code = _cmd_check(dataset, args, report)
            elif args.command == "rationalize":
                code = _cmd_rationalize(dataset, args, report)
            elif args.command == "rum":
                code = _cmd_rum(dataset, args, report)
            elif args.command == "luce":
                code = _cmd_luce(dataset, args, report)
            elif args.command == "tsc":
                code = _cmd_tsc(dataset, doc, args, report)
            else:
                code = _cmd_pf(dataset, doc, args, report)
    except MarginalChoiceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    report.emit()
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
