"""Digraph and graph types, structural predicates, and the undirected chromatic kernel.

Vertices are dense indices ``0..p-1``. Adjacency is stored as Python integer
bitmasks so the exhaustive searches elsewhere in the package can test set
membership and intersections in one operation.
"""

from __future__ import annotations

import heapq
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import DigraphError, SizeLimitError

CHROMATIC_LIMIT = 24


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Digraph:
    """Immutable loop-free digraph on vertices ``0..p-1``."""

    __slots__ = ("p", "arcs", "out_masks", "in_masks")

    def __init__(self, p: int, arcs: Iterable[tuple[int, int]] = ()):
        if p < 0:
            raise DigraphError(f"vertex count must be non-negative, got {p}")
        out = [0] * p
        inn = [0] * p
        seen = set()
        for arc in arcs:
            u, v = int(arc[0]), int(arc[1])
            if not (0 <= u < p and 0 <= v < p):
                raise DigraphError(f"arc ({u}, {v}) has an endpoint outside [0, {p})")
            if u == v:
                raise DigraphError(f"arc ({u}, {v}) is a self-loop")
            seen.add((u, v))
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.p = p
        self.arcs = frozenset(seen)
        self.out_masks = tuple(out)
        self.in_masks = tuple(inn)

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.p == other.p and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.p, self.arcs))

    def __repr__(self):
        return f"Digraph({self.p}, {self.sorted_arcs()})"

    def __len__(self):
        return self.p

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)

    def successors(self, v: int) -> list[int]:
        return list(iter_bits(self.out_masks[v]))

    def predecessors(self, v: int) -> list[int]:
        return list(iter_bits(self.in_masks[v]))

    @property
    def full_mask(self) -> int:
        return (1 << self.p) - 1

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.p, self.p), dtype=np.int8)
        for u, v in self.arcs:
            a[u, v] = 1
        return a


class UndirectedGraph:
    """Immutable simple graph on vertices ``0..p-1``."""

    __slots__ = ("p", "edges", "adj_masks")

    def __init__(self, p: int, edges: Iterable[tuple[int, int]] = ()):
        adj = [0] * p
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < p and 0 <= v < p):
                raise DigraphError(f"edge ({u}, {v}) has an endpoint outside [0, {p})")
            if u == v:
                raise DigraphError(f"edge ({u}, {v}) is a self-loop")
            seen.add((min(u, v), max(u, v)))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.p = p
        self.edges = frozenset(seen)
        self.adj_masks = tuple(adj)

    def __eq__(self, other):
        return isinstance(other, UndirectedGraph) and self.p == other.p and self.edges == other.edges

    def __hash__(self):
        return hash((self.p, self.edges))

    def __repr__(self):
        return f"UndirectedGraph({self.p}, {sorted(self.edges)})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_masks[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj_masks[v]))

    def degree(self, v: int) -> int:
        return self.adj_masks[v].bit_count()

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.p)), default=0)

    def as_digraph(self) -> Digraph:
        """The symmetric digraph with both orientations of every edge."""
        return Digraph(self.p, [a for u, v in self.edges for a in ((u, v), (v, u))])


def build_digraph(p: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph(p, arcs)


def _check_vertex(D, v):
    if not 0 <= v < D.p:
        raise DigraphError(f"vertex {v} outside [0, {D.p})")


def in_degree(D: Digraph, v: int) -> int:
    _check_vertex(D, v)
    return D.in_masks[v].bit_count()


def out_degree(D: Digraph, v: int) -> int:
    _check_vertex(D, v)
    return D.out_masks[v].bit_count()


def delta_in(D: Digraph) -> int:
    return max((m.bit_count() for m in D.in_masks), default=0)


def delta_od(D: Digraph) -> int:
    return max((m.bit_count() for m in D.out_masks), default=0)


def symmetric_arcs(D: Digraph) -> set[frozenset[int]]:
    return {frozenset((u, v)) for u, v in D.arcs if u < v and D.has_arc(v, u)}


def underlying_graph(D: Digraph) -> UndirectedGraph:
    return UndirectedGraph(D.p, D.arcs)


def digon_graph(D: Digraph) -> UndirectedGraph:
    """Graph whose edges are the symmetric pairs of ``D``."""
    return UndirectedGraph(D.p, [tuple(sorted(e)) for e in symmetric_arcs(D)])


def topological_order(D: Digraph, mask: int | None = None) -> tuple[list[int], int]:
    """Kahn's algorithm restricted to ``mask``, smallest ready vertex first.

    Returns the order found and the mask of vertices left over; the leftover
    set is empty exactly when the restricted subdigraph is acyclic.
    """
    if mask is None:
        mask = D.full_mask
    indeg = {v: (D.in_masks[v] & mask).bit_count() for v in iter_bits(mask)}
    heap = [v for v, d in indeg.items() if d == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for w in iter_bits(D.out_masks[u] & mask):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order, mask & ~to_mask(order)


def find_cycle(D: Digraph, mask: int | None = None) -> list[int] | None:
    """A directed cycle inside ``mask`` (smallest vertex first), or None."""
    _, rest = topological_order(D, mask)
    if not rest:
        return None
    # Every leftover vertex keeps a leftover predecessor, so walking
    # predecessors must revisit a vertex.
    v = (rest & -rest).bit_length() - 1
    walk = []
    pos = {}
    while v not in pos:
        pos[v] = len(walk)
        walk.append(v)
        pred = D.in_masks[v] & rest
        v = (pred & -pred).bit_length() - 1
    cycle = walk[pos[v]:][::-1]
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def is_acyclic(D: Digraph) -> tuple[bool, list[int]]:
    """``(True, topological order)`` or ``(False, directed cycle)``."""
    order, rest = topological_order(D)
    if not rest:
        return True, order
    return False, find_cycle(D)


def is_acyclic_mask(D: Digraph, mask: int) -> bool:
    return not topological_order(D, mask)[1]


def induced_subdigraph(D: Digraph, S: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Subdigraph induced by ``S``, re-indexed densely, with the back-map."""
    back = sorted(set(S))
    for v in back:
        _check_vertex(D, v)
    index = {v: i for i, v in enumerate(back)}
    arcs = [(index[u], index[v]) for u, v in D.arcs if u in index and v in index]
    return Digraph(len(back), arcs), back


def is_independent_set(D: Digraph, S: Iterable[int]) -> bool:
    mask = to_mask(S)
    return all(not (D.out_masks[v] & mask) for v in iter_bits(mask))


def _is_permutation(order: Sequence[int], p: int) -> bool:
    return len(order) == p and sorted(order) == list(range(p))


def check_order(order: Sequence[int], p: int) -> list[int]:
    order = [int(v) for v in order]
    if not _is_permutation(order, p):
        raise DigraphError(f"order {order} is not a permutation of 0..{p - 1}")
    return order


def canonical_colors(colors: Sequence[int]) -> tuple[int, ...]:
    """Renumber colors 1..k by first occurrence along vertex index."""
    relabel = {}
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
    return tuple(relabel[c] for c in colors)


def _k_colorable(adj, order, k):
    p = len(adj)
    classes = [0] * k
    colors = [0] * p

    def place(i, used):
        if i == len(order):
            return True
        v = order[i]
        for c in range(min(used + 1, k)):
            if not adj[v] & classes[c]:
                classes[c] |= 1 << v
                colors[v] = c + 1
                if place(i + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
        return False

    return colors if place(0, 0) else None


def chromatic_number_exact(G: UndirectedGraph, limit: int = CHROMATIC_LIMIT) -> tuple[int, tuple[int, ...]]:
    """Minimum proper coloring by iterative deepening on the number of colors.

    Vertices are branched in descending-degree order and a vertex may open at
    most one new color, so the first vertex always takes color 1.
    """
    if G.p > limit:
        raise SizeLimitError("chromatic_number_exact", G.p, limit)
    if G.p == 0:
        return 0, ()
    order = sorted(range(G.p), key=lambda v: (-G.degree(v), v))
    k = 1
    while True:
        colors = _k_colorable(G.adj_masks, order, k)
        if colors is not None:
            return k, canonical_colors(colors)
        k += 1


def greedy_color_graph(G: UndirectedGraph, order: Sequence[int]) -> tuple[int, ...]:
    """First-fit coloring along ``order``; returns colors indexed by vertex."""
    order = check_order(order, G.p)
    colors = [0] * G.p
    for v in order:
        taken = {colors[u] for u in iter_bits(G.adj_masks[v])}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return tuple(colors)


def random_digraph(p: int, arc_probability: float, allow_digons: bool = True, seed=None) -> Digraph:
    """Each ordered pair is an arc independently with ``arc_probability``.

    Without digons, a pair that drew both orientations keeps one of them,
    chosen uniformly.
    """
    if not 0.0 <= arc_probability <= 1.0:
        raise DigraphError(f"arc probability {arc_probability} outside [0, 1]")
    rng = np.random.default_rng(seed)
    draws = rng.random((p, p)) < arc_probability
    flips = rng.random((p, p)) < 0.5
    arcs = []
    for u, v in combinations(range(p), 2):
        fwd, bwd = bool(draws[u, v]), bool(draws[v, u])
        if fwd and bwd and not allow_digons:
            fwd, bwd = (True, False) if flips[u, v] else (False, True)
        if fwd:
            arcs.append((u, v))
        if bwd:
            arcs.append((v, u))
    return Digraph(p, arcs)


def random_dag(p: int, arc_probability: float, seed=None) -> Digraph:
    """Random acyclic digraph: forward arcs of a random vertex permutation."""
    rng = np.random.default_rng(seed)
    rank = rng.permutation(p)
    draws = rng.random((p, p)) < arc_probability
    arcs = [(int(rank[i]), int(rank[j])) for i, j in combinations(range(p), 2) if draws[i, j]]
    return Digraph(p, arcs)


def all_digraphs(p: int):
    """Every loop-free digraph on ``p`` labeled vertices (4**C(p,2) of them)."""
    pairs = [(u, v) for u in range(p) for v in range(p) if u != v]
    for bits in range(1 << len(pairs)):
        yield Digraph(p, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def all_graphs(p: int):
    pairs = list(combinations(range(p), 2))
    for bits in range(1 << len(pairs)):
        yield UndirectedGraph(p, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


# Named families used by tests, figures and notebooks.

def directed_path(n: int) -> Digraph:
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def directed_cycle(n: int) -> Digraph:
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def wheel_graph(n: int) -> UndirectedGraph:
    """Hub 0 joined to a rim cycle on ``1..n``."""
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    return UndirectedGraph(n + 1, [(0, i) for i in range(1, n + 1)] + rim)


def paley_tournament(q: int = 7) -> Digraph:
    """Quadratic-residue tournament: ``u -> v`` iff ``v - u`` is a nonzero square mod q."""
    squares = {(x * x) % q for x in range(1, q)}
    return Digraph(q, [(u, v) for u in range(q) for v in range(q) if u != v and (v - u) % q in squares])


def sample_digraphs(count: int, p_min: int, p_max: int, seed: int):
    """Seeded ensemble: instance ``i`` depends only on ``(seed, i)``.

    Odd-numbered instances allow digons, even-numbered ones are digon-free, so
    both halves of the bounds with a no-symmetric-arc hypothesis get exercised.
    """
    for i in range(count):
        rng = np.random.default_rng([seed, i])
        p = int(rng.integers(p_min, p_max + 1))
        prob = float(rng.uniform(0.1, 0.7))
        yield random_digraph(p, prob, allow_digons=bool(i % 2), seed=rng)
