"""Brute-force oracles and hypothesis strategies.

The oracles share no code with the package beyond the Digraph container:
acyclicity is decided by nilpotency of the adjacency matrix, colorings and
partitions are fully enumerated.
"""

from itertools import combinations, permutations, product

import numpy as np
import pytest
from hypothesis import strategies as st
from sympy.utilities.iterables import multiset_partitions

from dicolor.digraph import Digraph, UndirectedGraph


def nilpotent_acyclic(D, vertices=None):
    """Induced subdigraph on ``vertices`` is acyclic iff its adjacency matrix is nilpotent."""
    vs = list(range(D.p)) if vertices is None else sorted(vertices)
    n = len(vs)
    if n == 0:
        return True
    a = np.array([[1 if D.has_arc(u, v) else 0 for v in vs] for u in vs], dtype=np.int64)
    power = np.linalg.matrix_power(a, n)
    return not power.any()


def brute_chromatic(G):
    for k in range(1, G.p + 1):
        for colors in product(range(k), repeat=G.p):
            if all(colors[u] != colors[v] for u, v in G.edges):
                return k
    return 0


def brute_chi_d(D):
    for k in range(1, D.p + 1):
        for colors in product(range(k), repeat=D.p):
            if all(nilpotent_acyclic(D, [v for v in range(D.p) if colors[v] == c]) for c in range(k)):
                return k
    return 0


def brute_beta_oc(D):
    for size in range(D.p, 0, -1):
        for S in combinations(range(D.p), size):
            if nilpotent_acyclic(D, S):
                return size
    return 0


def brute_min_order_chi_d(D):
    """Minimum over orders of the fewest colors of a valid sequence, by full enumeration."""
    best = D.p
    for order in permutations(range(D.p)):
        pos = {v: i for i, v in enumerate(order)}
        for k in range(1, best):
            ok = False
            for colors in product(range(k), repeat=D.p):
                if all(not (pos[u] < pos[v] and colors[u] == colors[v]) for u, v in D.arcs):
                    ok = True
                    break
            if ok:
                best = k
                break
    return best


def set_partitions(p):
    if p == 0:
        yield []
        return
    yield from multiset_partitions(list(range(p)))


def brute_complete_max(p, adjacent, class_ok):
    best = 0
    for part in set_partitions(p):
        if len(part) <= best or not all(class_ok(c) for c in part):
            continue
        if all(any(adjacent(u, v) for u in a for v in b) for a, b in combinations(part, 2)):
            best = len(part)
    return best


def brute_psi(G):
    return brute_complete_max(
        G.p, G.has_edge, lambda c: all(not G.has_edge(u, v) for u, v in combinations(c, 2))
    )


def brute_psi_sd(D):
    return brute_complete_max(
        D.p, lambda u, v: D.has_arc(u, v) or D.has_arc(v, u), lambda c: nilpotent_acyclic(D, c)
    )


@st.composite
def digraphs(draw, min_p=1, max_p=6, digons=True):
    p = draw(st.integers(min_p, max_p))
    pairs = [(u, v) for u in range(p) for v in range(p) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    if not digons:
        chosen = [(u, v) for u, v in chosen if not ((v, u) in chosen and v < u)]
    return Digraph(p, chosen)


@st.composite
def graphs(draw, min_p=1, max_p=6):
    p = draw(st.integers(min_p, max_p))
    pairs = list(combinations(range(p), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return UndirectedGraph(p, chosen)


@pytest.fixture
def fig2():
    return Digraph(3, [(1, 0), (0, 2), (1, 2), (2, 1)])
