"""Numeric bounds on the dichromatic number and the two-class characterization.

Bounds with a no-symmetric-arc hypothesis refuse digraphs outside it instead
of returning a number that is not a bound.
"""

from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass, field

from .dichromatic import EXACT_LIMIT, beta_oc, chi_d_exact
from .digraph import (
    CHROMATIC_LIMIT,
    Digraph,
    chromatic_number_exact,
    delta_in,
    digon_graph,
    iter_bits,
    symmetric_arcs,
    underlying_graph,
)
from .errors import NotApplicableError, SizeLimitError


def bound_underlying(D: Digraph, limit: int = CHROMATIC_LIMIT) -> int:
    return chromatic_number_exact(underlying_graph(D), limit=limit)[0]


def _require_asymmetric(D: Digraph, name: str):
    pairs = symmetric_arcs(D)
    if pairs:
        shown = sorted(tuple(sorted(e)) for e in pairs)
        raise NotApplicableError(
            f"{name} requires a digraph without symmetric arcs; found {len(pairs)} "
            f"symmetric pair(s) {shown}. With symmetric arcs the bound can fall below "
            "the dichromatic number, e.g. arcs v2->v1, v1->v3, v2<->v3 give p - Delta_in = 1 "
            "while chi_d = 2."
        )


def bound_indegree(D: Digraph) -> int:
    """``p - Delta_in(D)`` for digraphs without symmetric arcs."""
    _require_asymmetric(D, "bound_indegree")
    return D.p - delta_in(D)


def bound_independent_sum(D: Digraph, limit: int = EXACT_LIMIT) -> tuple[int, list[int]]:
    """Minimum of ``p - sum(indeg(v) for v in S) + |S|`` over independent sets ``S``.

    Only vertices of in-degree at least 2 can lower the value, so the search
    is a branch-and-bound maximum-weight independent set over those, with
    weight ``indeg - 1``.
    """
    _require_asymmetric(D, "bound_independent_sum")
    if D.p > limit:
        raise SizeLimitError("bound_independent_sum", D.p, limit)
    adj = underlying_graph(D).adj_masks
    weight = [D.in_masks[v].bit_count() - 1 for v in range(D.p)]
    cands = [v for v in range(D.p) if weight[v] > 0]
    best = [0, 0]

    def branch(i, chosen, total, remaining):
        if total > best[0]:
            best[0], best[1] = total, chosen
        if i == len(cands) or total + remaining <= best[0]:
            return
        v = cands[i]
        rest = remaining - weight[v]
        if not adj[v] & chosen:
            branch(i + 1, chosen | 1 << v, total + weight[v], rest)
        branch(i + 1, chosen, total, rest)

    branch(0, 0, 0, sum(weight[v] for v in cands))
    return D.p - best[0], list(iter_bits(best[1]))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass
class BoundsReport:
    p: int
    chi_d: int | None
    chi_underlying: int
    beta_oc: int
    lower_ratio: int
    upper_beta: int
    delta_in: int
    bound_indegree: int | None = None
    bound_independent_sum: int | None = None
    independent_set: list[int] | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self):
        out = asdict(self)
        if out["independent_set"] is not None:
            out["independent_set"] = [f"v{v + 1}" for v in out["independent_set"]]
        return out


def sandwich_check(D: Digraph, limit: int = EXACT_LIMIT) -> BoundsReport:
    """Every bound on ``chi_d(D)`` with its verdict.

    Violations name the inequality that fails; an empty list means all
    applicable bounds hold on this instance.
    """
    chi_d = chi_d_exact(D, limit=limit)[0]
    beta = beta_oc(D, limit=limit)[0]
    report = BoundsReport(
        p=D.p,
        chi_d=chi_d,
        chi_underlying=bound_underlying(D),
        beta_oc=beta,
        lower_ratio=_ceil_div(D.p, beta) if beta else 0,
        upper_beta=D.p - beta + 1,
        delta_in=delta_in(D),
    )
    if not symmetric_arcs(D):
        report.bound_indegree = bound_indegree(D)
        report.bound_independent_sum, report.independent_set = bound_independent_sum(D, limit=limit)
    checks = [
        ("ceil(p/beta_oc) <= chi_d", report.lower_ratio <= chi_d),
        ("chi_d <= p - beta_oc + 1", chi_d <= report.upper_beta),
        ("chi_d <= chi(G(D))", chi_d <= report.chi_underlying),
    ]
    if report.bound_indegree is not None:
        checks.append(("chi_d <= p - Delta_in", chi_d <= report.bound_indegree))
        checks.append(("chi_d <= p - sum indeg(S) + |S|", chi_d <= report.bound_independent_sum))
    report.violations = [name for name, ok in checks if not ok]
    return report


def has_odd_symmetric_cycle(D: Digraph) -> tuple[bool, list[int]]:
    """Odd cycle made of symmetric pairs, found by 2-coloring the digon graph."""
    H = digon_graph(D)
    side = [-1] * D.p
    parent = [-1] * D.p
    for root in range(D.p):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in H.neighbors(u):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    return True, _odd_cycle(parent, u, w)
    return False, []


def _odd_cycle(parent, u, w):
    def to_root(x):
        path = [x]
        while parent[x] >= 0:
            x = parent[x]
            path.append(x)
        return path

    pu, pw = to_root(u), to_root(w)
    common = set(pu) & set(pw)
    lca = next(x for x in pu if x in common)
    cycle = pu[: pu.index(lca) + 1][::-1] + pw[: pw.index(lca)]
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def is_c_bipartite(D: Digraph, limit: int = EXACT_LIMIT) -> bool:
    """Do the vertices split into at most two acyclic classes?"""
    return chi_d_exact(D, limit=limit)[0] <= 2


def prop8_empirical(digraphs, limit: int = EXACT_LIMIT) -> dict:
    """Compare two-class colorability with the absence of odd symmetric cycles.

    Returns counts per verdict pair and the digraphs where the two disagree.
    """
    table = {"both_true": 0, "both_false": 0, "bipartite_only": 0, "no_odd_cycle_only": 0}
    discrepancies = []
    total = 0
    for D in digraphs:
        total += 1
        bip = is_c_bipartite(D, limit=limit)
        no_odd = not has_odd_symmetric_cycle(D)[0]
        if bip and no_odd:
            table["both_true"] += 1
        elif not bip and not no_odd:
            table["both_false"] += 1
        else:
            table["bipartite_only" if bip else "no_odd_cycle_only"] += 1
            discrepancies.append({"p": D.p, "arcs": D.sorted_arcs(), "c_bipartite": bip,
                                  "odd_symmetric_cycle": not no_odd})
    return {"instances": total, "table": table, "discrepancies": discrepancies}


def check_iff_claim(digraphs, limit: int = EXACT_LIMIT, keep: int = 20) -> dict:
    """Test ``chi_d(D) == chi(G(D))`` against "every arc is symmetric".

    ``if_failures`` would refute the forward direction (never expected);
    ``only_if_counterexamples`` are digraphs with equality but an asymmetric
    arc. At most ``keep`` examples of each kind are listed; counts are exact.
    """
    if_failures, only_if = [], []
    total = 0
    for D in digraphs:
        total += 1
        equal = chi_d_exact(D, limit=limit)[0] == bound_underlying(D)
        all_symmetric = 2 * len(symmetric_arcs(D)) == len(D.arcs)
        if all_symmetric and not equal:
            if_failures.append({"p": D.p, "arcs": D.sorted_arcs()})
        elif equal and not all_symmetric:
            only_if.append({"p": D.p, "arcs": D.sorted_arcs()})
    return {
        "instances": total,
        "if_failure_count": len(if_failures),
        "only_if_counterexample_count": len(only_if),
        "if_failures": if_failures[:keep],
        "only_if_counterexamples": only_if[:keep],
    }
