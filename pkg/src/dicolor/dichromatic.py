"""Order-free validity of digraph colorings and the exact dichromatic number.

A coloring is realizable by some coloring order exactly when its monochromatic
arcs contain no directed cycle: order the vertices so that every monochromatic
arc has its head colored before its tail. Every check here uses that criterion
directly. Enumeration over orders is kept only as ``chi_d_ordering_oracle``,
which exists to cross-check ``chi_d_exact``.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, Sequence

from .digraph import (
    Digraph,
    canonical_colors,
    find_cycle,
    is_acyclic,
    is_acyclic_mask,
    iter_bits,
    to_mask,
    topological_order,
    underlying_graph,
    symmetric_arcs,
)
from .errors import (
    CyclicDigraphError,
    DigraphError,
    DirectedPathError,
    InvalidColoringError,
    SizeLimitError,
)
from .sequences import ORDER_LIMIT, SequenceColoring, min_over_orders

EXACT_LIMIT = 20


def _class_masks(colors: Sequence[int]) -> dict[int, int]:
    masks: dict[int, int] = {}
    for v, c in enumerate(colors):
        masks[c] = masks.get(c, 0) | 1 << v
    return masks


def _check_coloring(D: Digraph, colors: Sequence[int]) -> list[int]:
    colors = [int(c) for c in colors]
    if len(colors) != D.p:
        raise DigraphError(f"coloring has {len(colors)} entries for {D.p} vertices")
    if any(c < 1 for c in colors):
        raise DigraphError("colors must be positive integers")
    return colors


def monochromatic_cycle(D: Digraph, colors: Sequence[int]) -> list[int] | None:
    colors = _check_coloring(D, colors)
    for _, mask in sorted(_class_masks(colors).items()):
        cycle = find_cycle(D, mask)
        if cycle is not None:
            return cycle
    return None


def realize_order(D: Digraph, colors: Sequence[int]) -> list[int]:
    """An order in which coloring ``colors`` obeys the head-before-tail rule.

    Every monochromatic arc must have its head first; the remaining freedom is
    resolved by taking the smallest ready vertex.
    """
    colors = _check_coloring(D, colors)
    cycle = monochromatic_cycle(D, colors)
    if cycle is not None:
        raise InvalidColoringError(cycle)
    constraint = Digraph(D.p, [(v, u) for u, v in D.arcs if colors[u] == colors[v]])
    return topological_order(constraint)[0]


def is_valid_coloring(D: Digraph, colors: Sequence[int]) -> tuple[bool, list[int]]:
    """``(True, realizing order)`` or ``(False, monochromatic directed cycle)``."""
    cycle = monochromatic_cycle(D, colors)
    if cycle is not None:
        return False, cycle
    return True, realize_order(D, colors)


def can_be_monochromatic(D: Digraph, S: Iterable[int]) -> bool:
    return is_acyclic_mask(D, to_mask(S))


def partition_from_colors(colors: Sequence[int]) -> list[list[int]]:
    """Color classes ordered by their smallest vertex."""
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return sorted(classes.values(), key=lambda cls: cls[0])


def colors_from_partition(p: int, partition: Iterable[Iterable[int]]) -> tuple[int, ...]:
    colors = [0] * p
    for i, cls in enumerate(partition, start=1):
        for v in cls:
            if colors[v]:
                raise DigraphError(f"vertex {v} appears in two classes")
            colors[v] = i
    if 0 in colors:
        raise DigraphError(f"vertex {colors.index(0)} is not covered by the partition")
    return tuple(colors)


# -- strongly connected pieces ----------------------------------------------

def _reach(D: Digraph, v: int, masks) -> int:
    seen = 1 << v
    frontier = masks[v]
    while frontier & ~seen:
        frontier &= ~seen
        seen |= frontier
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= masks[w]
        frontier = nxt
    return seen


def strongly_connected_components(D: Digraph) -> list[int]:
    """SCC vertex masks, ordered by smallest member."""
    left = D.full_mask
    comps = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = _reach(D, v, D.out_masks) & _reach(D, v, D.in_masks)
        comps.append(comp)
        left &= ~comp
    return comps


# -- exact dichromatic number ------------------------------------------------

def _closes_cycle(D: Digraph, v: int, cls: int) -> bool:
    """Would adding ``v`` to the acyclic class ``cls`` create a directed cycle?"""
    targets = D.in_masks[v] & cls
    if not targets:
        return False
    frontier = D.out_masks[v] & cls
    seen = frontier
    while frontier:
        if frontier & targets:
            return True
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= D.out_masks[w]
        frontier = nxt & cls & ~seen
        seen |= frontier
    return False


def _k_partition(D: Digraph, vertices: list[int], k: int) -> list[int] | None:
    classes = [0] * k

    def place(i, used):
        if i == len(vertices):
            return True
        v = vertices[i]
        for c in range(min(used + 1, k)):
            if not _closes_cycle(D, v, classes[c]):
                classes[c] |= 1 << v
                if place(i + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
        return False

    return classes if place(0, 0) else None


def chi_d_exact(D: Digraph, limit: int = EXACT_LIMIT) -> tuple[int, list[list[int]]]:
    """Minimum number of acyclic classes partitioning the vertices, with a witness.

    Acyclic digraphs take a linear-time path and are not subject to ``limit``.
    Otherwise each strongly connected component is solved by iterative
    deepening on the class count; components share class indices.
    """
    if D.p == 0:
        return 0, []
    if is_acyclic(D)[0]:
        return 1, [list(range(D.p))]
    if D.p > limit:
        raise SizeLimitError("chi_d_exact", D.p, limit)
    degree = [D.out_masks[v].bit_count() + D.in_masks[v].bit_count() for v in range(D.p)]
    colors = [1] * D.p
    best = 1
    for comp in strongly_connected_components(D):
        if comp.bit_count() == 1:
            continue
        vertices = sorted(iter_bits(comp), key=lambda v: (-degree[v], v))
        k = 2
        while (classes := _k_partition(D, vertices, k)) is None:
            k += 1
        for c, mask in enumerate(classes, start=1):
            for v in iter_bits(mask):
                colors[v] = c
        best = max(best, k)
    return best, partition_from_colors(canonical_colors(colors))


def chi_d_ordering_oracle(D: Digraph, limit: int = ORDER_LIMIT) -> int:
    """Dichromatic number as the minimum exact s-number over all orders."""
    if D.p > limit:
        raise SizeLimitError("chi_d_ordering_oracle", D.p, limit)
    return min_over_orders(D, "exact", limit=limit)[0]


# -- c-independence number ----------------------------------------------------

def _core(D: Digraph, mask: int) -> int:
    """Drop vertices with no in- or out-neighbor inside ``mask`` until stable."""
    changed = True
    while changed:
        changed = False
        for v in iter_bits(mask):
            if not (D.in_masks[v] & mask) or not (D.out_masks[v] & mask):
                mask &= ~(1 << v)
                changed = True
    return mask


def _shortest_cycle(D: Digraph, mask: int) -> list[int]:
    best = None
    for s in iter_bits(mask):
        parent = {s: None}
        queue = deque([s])
        found = None
        while queue and found is None:
            u = queue.popleft()
            for w in iter_bits(D.out_masks[u] & mask):
                if w == s:
                    found = u
                    break
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        if found is not None:
            cycle = []
            x = found
            while x is not None:
                cycle.append(x)
                x = parent[x]
            cycle.reverse()
            if best is None or len(cycle) < len(best):
                best = cycle
                if len(best) == 2:
                    break
    return best


def _fvs(D: Digraph, mask: int, k: int) -> int | None:
    mask = _core(D, mask)
    if not mask:
        return 0
    if k == 0:
        return None
    for v in _shortest_cycle(D, mask):
        rest = _fvs(D, mask & ~(1 << v), k - 1)
        if rest is not None:
            return rest | 1 << v
    return None


def min_feedback_vertex_set(D: Digraph, limit: int = EXACT_LIMIT) -> list[int]:
    """Smallest vertex set meeting every directed cycle (branch on a shortest cycle)."""
    if D.p > limit and not is_acyclic(D)[0]:
        raise SizeLimitError("min_feedback_vertex_set", D.p, limit)
    k = 0
    while (found := _fvs(D, D.full_mask, k)) is None:
        k += 1
    return list(iter_bits(found))


def beta_oc(D: Digraph, limit: int = EXACT_LIMIT) -> tuple[int, list[int]]:
    """Largest vertex set inducing an acyclic subdigraph, with a witness."""
    fvs = set(min_feedback_vertex_set(D, limit=limit))
    keep = [v for v in range(D.p) if v not in fvs]
    return len(keep), keep


# -- constructive one- and two-colorings -------------------------------------

def _reverse(D: Digraph) -> Digraph:
    return Digraph(D.p, [(v, u) for u, v in D.arcs])


def acyclic_one_coloring(D: Digraph) -> SequenceColoring:
    """All vertices color 1, sinks first (reverse topological order)."""
    ok, witness = is_acyclic(D)
    if not ok:
        raise CyclicDigraphError(witness)
    order = topological_order(_reverse(D))[0]
    return SequenceColoring.from_order(order, [1] * D.p)


def directed_cycle_two_coloring(n: int) -> SequenceColoring:
    """Color v1 and vn with 1 first, then v2..v(n-1) alternately 2, 1, ..."""
    if n < 3:
        raise DigraphError(f"directed cycle needs n >= 3, got {n}")
    pairs = [(0, 1), (n - 1, 1)]
    pairs += [(v, 2 if i % 2 == 0 else 1) for i, v in enumerate(range(1, n - 1))]
    return SequenceColoring(tuple(pairs))


def _cycle_walk(D: Digraph) -> list[int] | None:
    """Vertices of the underlying cycle in walk order, or None if it is not a cycle."""
    G = underlying_graph(D)
    if G.p < 3 or any(G.degree(v) != 2 for v in range(G.p)):
        return None
    walk = [0]
    prev, cur = None, 0
    while True:
        nxt = [w for w in G.neighbors(cur) if w != prev]
        nxt = nxt[0] if prev is not None else min(nxt)
        if nxt == 0:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    return walk if len(walk) == G.p else None


def semicycle_one_coloring(D: Digraph) -> SequenceColoring:
    """All-1 sequence for an orientation of a cycle that is not a directed cycle.

    Walk the cycle from a sink. The turning points split it into maximal
    directed paths, each running from a source to a sink. Sinks are colored
    first, then the inner vertices of each path from its sink end back toward
    its source, and the sources last.
    """
    walk = _cycle_walk(D)
    if walk is None:
        raise DigraphError("underlying graph is not a cycle")
    if symmetric_arcs(D):
        raise DigraphError("semi-cycle must not contain symmetric arcs")
    n = len(walk)
    sinks = [v for v in walk if not D.out_masks[v]]
    if not sinks:
        raise DigraphError("digraph is a directed cycle")
    start = walk.index(min(sinks))
    walk = walk[start:] + walk[:start]
    turning = [i for i, v in enumerate(walk) if not D.out_masks[v] or not D.in_masks[v]]
    order = [v for v in walk if not D.out_masks[v]]
    for a, b in zip(turning, turning[1:] + [n]):
        inner = [walk[i % n] for i in range(a + 1, b)]
        # the sink end of this path is whichever turning point has no out-arcs
        if D.out_masks[walk[a]]:
            inner.reverse()
        order += inner
    order += [v for v in walk if not D.in_masks[v]]
    return SequenceColoring.from_order(order, [1] * n)


def directed_path_between(D: Digraph, u: int, v: int) -> list[int] | None:
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            path = []
            while x is not None:
                path.append(x)
                x = parent[x]
            return path[::-1]
        for w in D.successors(x):
            if w not in parent:
                parent[w] = x
                queue.append(w)
    return None


def order_with_u_before_v(D: Digraph, u: int, v: int) -> SequenceColoring:
    """All-1 sequence of an acyclic digraph in which ``u`` is colored before ``v``.

    ``u`` can precede ``v`` unless ``u`` reaches ``v``. Everything ``u``
    reaches is colored first (heads before tails), then ``u``, then the rest.
    """
    ok, witness = is_acyclic(D)
    if not ok:
        raise CyclicDigraphError(witness)
    if u == v:
        raise DigraphError("u and v must differ")
    path = directed_path_between(D, u, v)
    if path is not None:
        raise DirectedPathError(path)
    below = _reach(D, u, D.out_masks)
    R = _reverse(D)
    indeg = [R.in_masks[x].bit_count() for x in range(D.p)]
    heap = [(0 if below >> x & 1 else 1, x) for x in range(D.p) if indeg[x] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, x = heapq.heappop(heap)
        order.append(x)
        for w in R.successors(x):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, (0 if below >> w & 1 else 1, w))
    return SequenceColoring.from_order(order, [1] * D.p)


def is_oriented_tree(D: Digraph) -> bool:
    """Digon-free digraph whose underlying graph is a tree."""
    G = underlying_graph(D)
    if symmetric_arcs(D) or len(G.edges) != max(D.p - 1, 0):
        return False
    return D.p == 0 or _reach(D, 0, G.adj_masks) == D.full_mask
