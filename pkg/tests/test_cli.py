import json
from fractions import Fraction as F

import pytest

from marginal_choice.cli import run

FIG1 = {
    "alternatives": ["a", "b", "c"],
    "mu": {
        "a": "0.1",
        "b": "0.1",
        "c": "0.15",
        "a,b": "0.3",
        "a,c": "0.1",
        "b,c": "0.1",
        "a,b,c": "0.15",
    },
    "lambda": {"a": "1/3", "b": "1/3", "c": "1/3"},
}

EX2 = {
    "alternatives": ["a", "b"],
    "outside_option": True,
    "mu": {"a,x*": "1/3", "b,x*": "1/3", "a,b,x*": "1/3"},
    "lambda": {"a": "1/3", "b": "1/3", "x*": "1/3"},
}

EX3 = {
    "alternatives": ["a", "b", "c"],
    "mu": {"a": "1/4", "c": "1/4", "a,b": "1/4", "b,c": "1/4"},
    "lambda": {"a": "1/4", "b": "1/2", "c": "1/4"},
}


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="data.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)

    return _write


def run_json(args, capsys):
    code = run(["--format", "json"] + args)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_check_fig1(write, capsys):
    code, report = run_json(["check", write(FIG1)], capsys)
    assert code == 0
    assert report["rationalizable"] is True
    assert report["min_slack"] == {"menu": "a,b", "slack": "1/6"}


def test_check_negative_exit_code(write, capsys):
    doc = {
        "alternatives": ["a", "b"],
        "mu": {"a": "1"},
        "lambda": {"b": "1"},
    }
    code, report = run_json(["check", write(doc)], capsys)
    assert code == 1
    assert report["violated"] == [{"menu": "a", "deficit": "1"}]


def test_validation_error_exit_2(write, capsys):
    doc = {
        "alternatives": ["a", "b"],
        "mu": {"a": "0.6", "b": "0.5"},
        "lambda": {"a": "1/2", "b": "1/2"},
    }
    assert run(["check", write(doc)]) == 2
    assert "sum to 1" in capsys.readouterr().err


def test_missing_file_exit_2(tmp_path, capsys):
    assert run(["check", str(tmp_path / "nope.json")]) == 2


def test_rationalize_round_trip(write, capsys):
    code, report = run_json(["rationalize", write(FIG1)], capsys)
    assert code == 0
    # Reported pi must reproduce lambda exactly.
    mu = {menu: F(w) for menu, w in FIG1["mu"].items()}
    totals = {"a": F(0), "b": F(0), "c": F(0)}
    for menu, dist in report["pi"].items():
        for alt, p in dist.items():
            totals[alt] += mu[menu] * F(p)
    assert all(v == F(1, 3) for v in totals.values())


def test_rum_round_trip(write, capsys):
    code, report = run_json(["rum", write(FIG1)], capsys)
    assert code == 0
    mu = {menu: F(w) for menu, w in FIG1["mu"].items()}
    totals = {"a": F(0), "b": F(0), "c": F(0)}
    labels = ["a", "b", "c"]
    for order_label, w in report["nu"].items():
        ranking = order_label.split(">")
        for menu, mw in mu.items():
            members = menu.split(",")
            top = next(x for x in ranking if x in members)
            totals[top] += F(w) * mw
    assert all(v == F(1, 3) for v in totals.values())


def test_luce_subcommand(write, capsys):
    doc = {
        "alternatives": ["a", "b", "c"],
        "mu": {"a,b,c": "1"},
        "lambda": {"a": "0.2", "b": "0.3", "c": "0.5"},
    }
    code, report = run_json(["luce", write(doc)], capsys)
    assert code == 0
    assert report["u_exact"] == {"a": "1/5", "b": "3/10", "c": "1/2"}
    assert float(report["residual"]) < 1e-8


def test_luce_boundary_exit_1(write, capsys):
    doc = {
        "alternatives": ["a", "b"],
        "mu": {"a": "1/2", "a,b": "1/2"},
        "lambda": {"a": "1/2", "b": "1/2"},
    }
    code, report = run_json(["luce", write(doc)], capsys)
    assert code == 1
    assert report["luce_rationalizable"] is False


def test_ircs_example2(write, capsys):
    code, report = run_json(["ircs", write(EX2)], capsys)
    assert code == 0
    assert report["ircs_rationalizable"] is True
    solutions = {s["order"]: s["gamma"] for s in report["solutions"]}
    assert solutions["a>b"] == {"a": "1/2", "b": "2/3"}
    assert solutions["b>a"] == {"a": "2/3", "b": "1/2"}


def test_ircs_implicit_outside_mass(write, capsys):
    doc = dict(EX2, **{"lambda": {"a": "1/3", "b": "1/3"}})
    code, report = run_json(["ircs", write(doc)], capsys)
    assert code == 0  # x* mass inferred as the residual 1/3


def test_tsc_example3(write, capsys):
    code, report = run_json(
        [
            "tsc",
            write(EX3),
            "--feasible",
            "{a};{c};{a,b};{b,c};{a,b,c}",
        ],
        capsys,
    )
    assert code == 0
    assert report["pi"]["a,b"] == {"b": "1"}
    assert report["pi"]["b,c"] == {"b": "1"}


def test_tsc_feasible_from_file(write, capsys):
    doc = dict(EX3, feasible=["a", "c", "a,b", "b,c", "a,b,c"])
    code, report = run_json(["tsc", write(doc)], capsys)
    assert code == 0 and report["tsc_rationalizable"] is True


def test_tsc_missing_feasible_exit_2(write, capsys):
    assert run(["tsc", write(EX3)]) == 2


def test_pf_verdicts(write, capsys):
    doc = {
        "alternatives": ["a", "b", "c"],
        "mu": {"a,b": "1/2", "b,c": "1/2"},
        "lambda": {"a": "1/4", "b": "1/2", "c": "1/4"},
        "feasible": ["a,b", "b,c"],
    }
    code, report = run_json(["pf", write(doc)], capsys)
    assert code == 0 and report["verdict"] == "rationalizable"
    doc["lambda"] = {"a": "1/2", "b": "0", "c": "1/2"}
    code, report = run_json(["pf", write(doc)], capsys)
    assert code == 1 and report["verdict"] == "indeterminate"


def test_avail_construct(write, capsys):
    doc = {
        "alternatives": ["a", "b"],
        "xi": {"a": "1", "b": "1/2"},
        "lambda": {"a": "3/4", "b": "1/4"},
    }
    code, report = run_json(["avail", write(doc)], capsys)
    assert code == 0
    assert report["mu"] == {"a": "1/2", "a,b": "1/2"}


def test_avail_negative(write, capsys):
    doc = {
        "alternatives": ["a", "b"],
        "xi": {"a": "1", "b": "1/10"},
        "lambda": {"a": "1/2", "b": "1/2"},
    }
    code, report = run_json(["avail", write(doc)], capsys)
    assert code == 1
    assert report["overchosen"] == ["b"]


def test_gen_rum_to_file(write, tmp_path, capsys):
    params = {
        "model": "rum",
        "alternatives": ["a", "b", "c"],
        "mu": {"a,b": "1/4", "a,c": "1/4", "b,c": "1/4", "a,b,c": "1/4"},
        "nu": {"a>b>c": "1/3", "b>c>a": "1/3", "c>a>b": "1/3"},
    }
    out = tmp_path / "generated.json"
    assert run(["gen", write(params), "-o", str(out)]) == 0
    generated = json.loads(out.read_text())
    assert generated["lambda"] == {"a": "1/3", "b": "1/3", "c": "1/3"}
    # Generated files feed straight back into the analysis subcommands.
    assert run(["check", str(out)]) == 0


def test_gen_luce_and_ircs(write, capsys):
    luce_params = {
        "model": "luce",
        "alternatives": ["a", "b"],
        "mu": {"a,b": "1"},
        "u": {"a": "1/4", "b": "3/4"},
    }
    code, doc = run_json(["gen", write(luce_params)], capsys)
    assert code == 0 and doc["lambda"] == {"a": "1/4", "b": "3/4"}
    ircs_params = {
        "model": "ircs",
        "alternatives": ["a", "b"],
        "mu": {"a": "1/3", "b": "1/3", "a,b": "1/3"},
        "order": "a>b",
        "gamma": {"a": "1/2", "b": "2/3"},
    }
    code, doc = run_json(["gen", write(ircs_params)], capsys)
    assert code == 0
    assert doc["lambda"] == {"a": "1/3", "b": "1/3", "x*": "1/3"}


def test_gen_unknown_model_exit_2(write, capsys):
    assert run(["gen", write({"model": "nope", "alternatives": ["a"]})]) == 2


def test_text_format_smoke(write, capsys):
    assert run(["check", write(FIG1)]) == 0
    out = capsys.readouterr().out
    assert "rationalizable: yes" in out
    assert "min slack 1/6 at menu a,b" in out
