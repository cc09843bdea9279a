"""Max-flow feasibility engine for conditional-system construction.

Given weights over an abstract index set, a target choice distribution,
and a feasibility map assigning each index a menu of allowed
alternatives, either build a conditional system reproducing the target
exactly or report a violating set of alternatives (a min cut).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Mapping, Sequence

from .domain import ONE, ZERO, ChoiceDistribution, MarginalDataset, bits_of
from .errors import DatasetError, EmptyMenu


@dataclass(frozen=True)
class FlowProblem:
    """Sources with weights, per-alternative sink weights, and allowed menus."""

    n: int
    sources: tuple[tuple[Hashable, Fraction], ...]
    sink_weights: tuple[Fraction, ...]
    allowed: Mapping[Hashable, int]

    def __post_init__(self):
        if len(self.sink_weights) != self.n:
            raise DatasetError("sink weights must cover every alternative")
        if sum((w for _, w in self.sources), ZERO) != 1:
            raise DatasetError("source weights must sum to 1")
        if sum(self.sink_weights, ZERO) != 1:
            raise DatasetError("sink weights must sum to 1")
        full = (1 << self.n) - 1
        for key, _ in self.sources:
            mask = self.allowed.get(key, 0)
            if mask == 0:
                raise EmptyMenu(f"allowed set for {key!r} is empty")
            if mask & ~full:
                raise DatasetError(f"allowed set for {key!r} leaves the universe")


@dataclass(frozen=True)
class FlowResult:
    """Feasibility verdict with either a witness or a violating cut.

    ``pi`` maps each source key to a conditional distribution supported in
    its allowed menu; ``cut`` is the bitmask A with lam(A) strictly below
    the weight of sources confined to A.
    """

    feasible: bool
    pi: dict[Hashable, ChoiceDistribution] | None
    cut: int | None


def solve_flow(problem: FlowProblem) -> FlowResult:
    """Exact-rational max-flow on the bipartite availability network.

    Nodes are source, alternatives, index keys, sink; augmenting paths are
    found by BFS.  A max flow of 1 yields the conditional system; anything
    less yields the violating set of alternatives unreachable in the
    residual graph.
    """
    n = problem.n
    keys = [key for key, _ in problem.sources]
    weights = dict(problem.sources)
    m = len(keys)
    # Node ids: 0 = source, 1..n alternatives, n+1..n+m index keys, n+m+1 sink.
    s, t = 0, n + m + 1
    size = t + 1
    cap: list[dict[int, Fraction]] = [dict() for _ in range(size)]

    def add_edge(u: int, v: int, c: Fraction) -> None:
        cap[u][v] = cap[u].get(v, ZERO) + c
        cap[v].setdefault(u, ZERO)

    for a in range(n):
        if problem.sink_weights[a] > 0:
            add_edge(s, 1 + a, problem.sink_weights[a])
    for j, key in enumerate(keys):
        for a in bits_of(problem.allowed[key]):
            add_edge(1 + a, 1 + n + j, ONE)
        if weights[key] > 0:
            add_edge(1 + n + j, t, weights[key])

    flow: list[dict[int, Fraction]] = [
        {v: ZERO for v in cap[u]} for u in range(size)
    ]

    def bfs_augment() -> Fraction:
        parent = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if u == t:
                break
            for v, c in cap[u].items():
                if v not in parent and c - flow[u][v] > 0:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            return ZERO
        bottleneck = None
        v = t
        while parent[v] is not None:
            u = parent[v]
            residual = cap[u][v] - flow[u][v]
            bottleneck = residual if bottleneck is None else min(bottleneck, residual)
            v = u
        v = t
        while parent[v] is not None:
            u = parent[v]
            flow[u][v] += bottleneck
            flow[v][u] -= bottleneck
            v = u
        return bottleneck

    total = ZERO
    while True:
        pushed = bfs_augment()
        if pushed == 0:
            break
        total += pushed

    if total == 1:
        pi: dict[Hashable, ChoiceDistribution] = {}
        for j, key in enumerate(keys):
            w = weights[key]
            probs = [ZERO] * n
            if w > 0:
                for a in bits_of(problem.allowed[key]):
                    probs[a] = flow[1 + a].get(1 + n + j, ZERO) / w
            else:
                # Zero-weight indexes get the uniform conditional.
                members = list(bits_of(problem.allowed[key]))
                share = Fraction(1, len(members))
                for a in members:
                    probs[a] = share
            pi[key] = ChoiceDistribution(tuple(probs))
        return FlowResult(feasible=True, pi=pi, cut=None)

    # Residual reachability from the source; the violating set is the
    # alternatives the search cannot reach.
    reachable = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v, c in cap[u].items():
            if v not in reachable and c - flow[u][v] > 0:
                reachable.add(v)
                queue.append(v)
    cut_mask = 0
    for a in range(n):
        if (1 + a) not in reachable:
            cut_mask |= 1 << a
    # The cut inequality must be violated exactly.
    lam_cut = sum((problem.sink_weights[a] for a in bits_of(cut_mask)), ZERO)
    mu_cut = sum(
        (weights[key] for key in keys if problem.allowed[key] & ~cut_mask == 0),
        ZERO,
    )
    assert lam_cut < mu_cut
    return FlowResult(feasible=False, pi=None, cut=cut_mask)


def rationalize(dataset: MarginalDataset) -> FlowResult:
    """Feasibility of the dataset itself: indexes are the support menus."""
    problem = FlowProblem(
        n=dataset.universe.n,
        sources=tuple(sorted(dataset.mu.weights.items())),
        sink_weights=dataset.lam.probs,
        allowed={mask: mask for mask in dataset.mu.weights},
    )
    return solve_flow(problem)
