"""Complete partitions: achromatic number, psi_sd, Grundy number, and the coloring-number chain.

A partition is complete when every two of its classes are joined by at least
one edge (for a digraph: an arc in either direction). Maximum complete
partitions are found by exhaustive search over set partitions in
restricted-growth-string order, with classes kept feasible as they grow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .dichromatic import _closes_cycle, chi_d_exact
from .digraph import (
    Digraph,
    UndirectedGraph,
    chromatic_number_exact,
    iter_bits,
    to_mask,
    underlying_graph,
)
from .errors import DigraphError, SizeLimitError
from .sequences import max_over_orders, min_over_orders

PARTITION_LIMIT = 10
CHAIN_LIMIT = 8


def _adjacency(G_or_D) -> tuple[int, tuple[int, ...]]:
    if isinstance(G_or_D, Digraph):
        G_or_D = underlying_graph(G_or_D)
    return G_or_D.p, G_or_D.adj_masks


def _check_partition(p: int, partition) -> list[int]:
    masks = []
    covered = 0
    for cls in partition:
        mask = to_mask(cls)
        if not mask:
            raise DigraphError("partition has an empty class")
        if mask & covered:
            raise DigraphError("partition classes overlap")
        if mask >> p:
            raise DigraphError(f"partition names a vertex outside [0, {p})")
        covered |= mask
        masks.append(mask)
    if covered != (1 << p) - 1:
        raise DigraphError("partition does not cover every vertex")
    return masks


def _joined(adj, a: int, b: int) -> bool:
    return any(adj[v] & b for v in iter_bits(a))


def is_complete_partition(G_or_D, partition: Iterable[Iterable[int]]) -> bool:
    p, adj = _adjacency(G_or_D)
    masks = _check_partition(p, partition)
    return all(_joined(adj, a, b) for i, a in enumerate(masks) for b in masks[i + 1:])


def _is_complete_masks(adj, masks) -> bool:
    return all(_joined(adj, a, b) for i, a in enumerate(masks) for b in masks[i + 1:])


def feasible_partitions(p: int, fits: Callable[[int, int], bool]):
    """Set partitions of ``0..p-1`` in restricted-growth order whose classes all stay feasible.

    ``fits(v, cls)`` says whether vertex ``v`` may join the class mask ``cls``.
    Yields lists of class masks (shared buffer; copy before keeping).
    """
    classes: list[int] = []

    def grow(v):
        if v == p:
            yield classes
            return
        for i in range(len(classes)):
            if fits(v, classes[i]):
                classes[i] |= 1 << v
                yield from grow(v + 1)
                classes[i] &= ~(1 << v)
        classes.append(1 << v)
        yield from grow(v + 1)
        classes.pop()

    yield from grow(0)


def _independent_fit(adj):
    return lambda v, cls: not adj[v] & cls


def _acyclic_fit(D):
    return lambda v, cls: not _closes_cycle(D, v, cls)


def _max_complete(p, adj, fits):
    best, witness = 0, []
    for masks in feasible_partitions(p, fits):
        if len(masks) > best and _is_complete_masks(adj, masks):
            best, witness = len(masks), list(masks)
    return best, [list(iter_bits(m)) for m in witness]


def achromatic_number(G: UndirectedGraph, limit: int = PARTITION_LIMIT) -> tuple[int, list[list[int]]]:
    """Largest complete partition into independent sets."""
    if G.p > limit:
        raise SizeLimitError("achromatic_number", G.p, limit)
    if G.p == 0:
        return 0, []
    return _max_complete(G.p, G.adj_masks, _independent_fit(G.adj_masks))


def psi_sd(D: Digraph, limit: int = PARTITION_LIMIT) -> tuple[int, list[list[int]]]:
    """Largest complete partition whose classes each induce an acyclic subdigraph."""
    if D.p > limit:
        raise SizeLimitError("psi_sd", D.p, limit)
    if D.p == 0:
        return 0, []
    return _max_complete(D.p, underlying_graph(D).adj_masks, _acyclic_fit(D))


def grundy_number(G: UndirectedGraph, limit: int = 9) -> tuple[int, list[int]]:
    """Most colors first-fit can use over all orders."""
    return max_over_orders(G, "greedy", limit=limit)


def complete_partitions_by_order(G: UndirectedGraph, limit: int = CHAIN_LIMIT) -> dict[int, list[list[int]]]:
    """First complete independent-set partition found for each achievable order."""
    if G.p > limit:
        raise SizeLimitError("complete_partitions_by_order", G.p, limit)
    found: dict[int, list[list[int]]] = {}
    for masks in feasible_partitions(G.p, _independent_fit(G.adj_masks)):
        if len(masks) not in found and _is_complete_masks(G.adj_masks, masks):
            found[len(masks)] = [list(iter_bits(m)) for m in masks]
    return dict(sorted(found.items()))


@dataclass
class InterpolationReport:
    chi: int
    psi: int
    witnesses: dict[int, list[list[int]] | None]

    @property
    def holds(self) -> bool:
        return all(w is not None for w in self.witnesses.values())

    def to_json(self):
        return {
            "chi": self.chi,
            "psi": self.psi,
            "holds": self.holds,
            "table": {str(a): _names(w) if w is not None else None for a, w in self.witnesses.items()},
        }


def _names(partition):
    return [[f"v{v + 1}" for v in cls] for cls in partition]


def interpolation_check(G: UndirectedGraph, limit: int = CHAIN_LIMIT) -> InterpolationReport:
    """Is there a complete partition of every order between chi(G) and psi(G)?"""
    table = complete_partitions_by_order(G, limit=limit)
    if G.p == 0:
        return InterpolationReport(0, 0, {})
    chi = chromatic_number_exact(G)[0]
    psi = max(table)
    return InterpolationReport(chi, psi, {a: table.get(a) for a in range(chi, psi + 1)})


def chi_equals_psi_check(G: UndirectedGraph, limit: int = CHAIN_LIMIT) -> tuple[bool, int, int]:
    if G.p > limit:
        raise SizeLimitError("chi_equals_psi_check", G.p, limit)
    chi = chromatic_number_exact(G)[0]
    psi = achromatic_number(G)[0]
    return chi == psi, chi, psi


CHAIN_HEADER = "chi_d(D) <= chi_s(D) <= chi(G) <= chi_s(G) <= psi_s(G) <= psi_sd(D)"


@dataclass
class ChainReport:
    """Per-instance values of every coloring number in the chain, with link verdicts.

    The ``s`` numbers are first-fit counts along an order; ``*_min`` and
    ``*_max`` are their extremes over all orders. The printed chain is
    evaluated with each ``chi_s`` read as the best order and ``psi_s(G)`` read
    as the achromatic number.
    """

    values: dict[str, int]
    links: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def failed(self) -> list[str]:
        return [name for name, ok in self.links if not ok]

    def to_json(self):
        return {
            "header": CHAIN_HEADER,
            "values": dict(self.values),
            "links": [{"link": name, "holds": ok} for name, ok in self.links],
        }


CHAIN_LINKS = (
    ("chi_d <= chi_sd_min", "chi_d", "chi_sd_min"),
    ("chi_sd_min <= chi_G", "chi_sd_min", "chi_G"),
    ("chi_G <= chi_s_G_min", "chi_G", "chi_s_G_min"),
    ("chi_s_G_min <= psi_G", "chi_s_G_min", "psi_G"),
    ("psi_G <= psi_sd", "psi_G", "psi_sd"),
    ("psi_sd <= psi_G", "psi_sd", "psi_G"),
    ("chi_sd_max <= psi_sd", "chi_sd_max", "psi_sd"),
    ("grundy_G <= psi_G", "chi_s_G_max", "psi_G"),
)

CHAIN_IDENTITIES = (
    ("psi_G == grundy_G", "psi_G", "chi_s_G_max"),
    ("psi_sd == chi_sd_max", "psi_sd", "chi_sd_max"),
    ("chi_G == chi_s_G_min", "chi_G", "chi_s_G_min"),
    ("chi_d == chi_sd_min", "chi_d", "chi_sd_min"),
)


def chain_check(D: Digraph, limit: int = CHAIN_LIMIT) -> ChainReport:
    if D.p > limit:
        raise SizeLimitError("chain_check", D.p, limit)
    G = underlying_graph(D)
    values = {
        "p": D.p,
        "chi_d": chi_d_exact(D)[0],
        "chi_sd_min": min_over_orders(D, "greedy", limit=limit)[0],
        "chi_sd_max": max_over_orders(D, "greedy", limit=limit)[0],
        "chi_G": chromatic_number_exact(G)[0],
        "chi_s_G_min": min_over_orders(G, "greedy", limit=limit)[0],
        "chi_s_G_max": max_over_orders(G, "greedy", limit=limit)[0],
        "psi_G": achromatic_number(G, limit=limit)[0],
        "psi_sd": psi_sd(D, limit=limit)[0],
    }
    links = [(name, values[a] <= values[b]) for name, a, b in CHAIN_LINKS]
    links += [(name, values[a] == values[b]) for name, a, b in CHAIN_IDENTITIES]
    return ChainReport(values, links)
