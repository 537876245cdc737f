"""Colorings along a fixed vertex order.

A sequence coloring lists ``(vertex, color)`` pairs in the order the vertices
are colored. An arc ``u -> v`` constrains the pair only when the tail ``u`` is
colored before the head ``v``; arcs pointing backward in the order are free.
For a fixed order the admissible colorings are therefore exactly the proper
colorings of the *forward constraint graph*.

Two per-order numbers are provided. ``s_number_exact`` is the fewest colors of
any admissible sequence, which is the chromatic number of the forward
constraint graph. ``s_number_greedy`` colors first-fit along the order, which
is what the worked figures count. They differ on graphs: the exact number of
any order of a graph is its chromatic number.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .digraph import (
    CHROMATIC_LIMIT,
    Digraph,
    UndirectedGraph,
    chromatic_number_exact,
    check_order,
    greedy_color_graph,
    is_acyclic,
    _k_colorable,
)
from .errors import DigraphError, SizeLimitError

ORDER_LIMIT = 9
MODES = ("exact", "greedy")


@dataclass(frozen=True)
class SequenceColoring:
    """Ordered ``(vertex, color)`` pairs; position 0 is colored first."""

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_order(cls, order: Sequence[int], colors_by_vertex: Sequence[int]) -> "SequenceColoring":
        return cls(tuple((int(v), int(colors_by_vertex[v])) for v in order))

    @property
    def order(self) -> list[int]:
        return [v for v, _ in self.pairs]

    @property
    def colors(self) -> tuple[int, ...]:
        """Colors indexed by vertex."""
        out = [0] * len(self.pairs)
        for v, c in self.pairs:
            out[v] = c
        return tuple(out)

    @property
    def n_colors(self) -> int:
        return len({c for _, c in self.pairs})

    def to_json(self):
        return [[f"v{v + 1}", c] for v, c in self.pairs]


def _check_sequence(D: Digraph, s: SequenceColoring):
    check_order(s.order, D.p)
    for v, c in s.pairs:
        if c < 1:
            raise DigraphError(f"vertex {v} has non-positive color {c}")


def validate_sequence_coloring(D: Digraph, s: SequenceColoring) -> tuple[bool, list[tuple[int, int, tuple[int, int]]]]:
    """Check every forward arc joins different colors.

    Violations are ``(position_i, position_j, (tail, head))`` with the tail at
    the earlier position ``i``.
    """
    _check_sequence(D, s)
    pos = {v: i for i, (v, _) in enumerate(s.pairs)}
    color = dict(s.pairs)
    violations = []
    for u, v in sorted(D.arcs):
        if pos[u] < pos[v] and color[u] == color[v]:
            violations.append((pos[u], pos[v], (u, v)))
    violations.sort()
    return not violations, violations


def forward_constraint_graph(D: Digraph, order: Sequence[int]) -> UndirectedGraph:
    order = check_order(order, D.p)
    pos = {v: i for i, v in enumerate(order)}
    return UndirectedGraph(D.p, [(u, v) for u, v in D.arcs if pos[u] < pos[v]])


def s_number_exact(D: Digraph, order: Sequence[int], limit: int = CHROMATIC_LIMIT) -> tuple[int, SequenceColoring]:
    H = forward_constraint_graph(D, order)
    k, colors = chromatic_number_exact(H, limit=limit)
    return k, SequenceColoring.from_order(order, colors)


def s_number_greedy(D: Digraph, order: Sequence[int]) -> tuple[int, SequenceColoring]:
    """First-fit along ``order`` against earlier-colored in-neighbors."""
    colors = greedy_color_graph(forward_constraint_graph(D, order), order)
    return max(colors, default=0), SequenceColoring.from_order(order, colors)


def s_number(D: Digraph, order: Sequence[int], mode: str = "greedy") -> tuple[int, SequenceColoring]:
    if mode == "greedy":
        return s_number_greedy(D, order)
    if mode == "exact":
        return s_number_exact(D, order)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def _as_digraph(D_or_G) -> Digraph:
    return D_or_G.as_digraph() if isinstance(D_or_G, UndirectedGraph) else D_or_G


def _forward_key(D, order):
    pos = [0] * D.p
    for i, v in enumerate(order):
        pos[v] = i
    return frozenset((u, v) for u, v in D.arcs if pos[u] < pos[v])


def _check_enumeration(name, p, limit):
    if p > limit:
        raise SizeLimitError(name, p, limit)


def min_over_orders(D_or_G, mode: str = "exact", limit: int = ORDER_LIMIT) -> tuple[int, list[int]]:
    """Smallest s-number over all ``p!`` orders, with the lexicographically first optimal order."""
    D = _as_digraph(D_or_G)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    _check_enumeration("min_over_orders", D.p, limit)
    if D.p == 0:
        return 0, []
    floor = 1 if is_acyclic(D)[0] else 2
    best, best_order = None, None
    seen = set()
    for order in permutations(range(D.p)):
        key = _forward_key(D, order)
        if mode == "exact":
            # The exact number depends only on the constraint graph.
            if key in seen:
                continue
            seen.add(key)
        H = UndirectedGraph(D.p, key)
        if mode == "exact":
            if best is not None and _k_colorable(H.adj_masks, range(D.p), best - 1) is None:
                continue
            value = chromatic_number_exact(H)[0]
        else:
            value = max(greedy_color_graph(H, order))
        if best is None or value < best:
            best, best_order = value, list(order)
            if best == floor:
                break
    return best, best_order


def max_over_orders(D_or_G, mode: str = "greedy", limit: int = ORDER_LIMIT) -> tuple[int, list[int]]:
    """Largest s-number over all ``p!`` orders, with the lexicographically first optimal order.

    Greedy mode on a graph is the Grundy number.
    """
    D = _as_digraph(D_or_G)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    _check_enumeration("max_over_orders", D.p, limit)
    if D.p == 0:
        return 0, []
    best, best_order = None, None
    cache = {}
    for order in permutations(range(D.p)):
        key = _forward_key(D, order)
        H = UndirectedGraph(D.p, key)
        if mode == "exact":
            if key not in cache:
                cache[key] = chromatic_number_exact(H)[0]
            value = cache[key]
        else:
            value = max(greedy_color_graph(H, order))
        if best is None or value > best:
            best, best_order = value, list(order)
            if best == D.p:
                break
    return best, best_order


def prop9_construct(n: int) -> tuple[Digraph, list[int]]:
    """Digraph on ``n`` vertices with an arc from every vertex to every later one.

    Built stage by stage: each new vertex receives arcs from all earlier ones,
    so first-fit along the natural order must open a new color each time.
    """
    if n < 1:
        raise DigraphError(f"n must be at least 1, got {n}")
    arcs = [(i, j) for j in range(n) for i in range(j)]
    return Digraph(n, arcs), list(range(n))


def is_valid_sequence(D: Digraph, order: Sequence[int], colors: Sequence[int]) -> bool:
    return validate_sequence_coloring(D, SequenceColoring.from_order(order, colors))[0]

