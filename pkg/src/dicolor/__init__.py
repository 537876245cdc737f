"""Order-dependent digraph coloring.

A digraph is colored one vertex at a time; when the tail of an arc is colored
before its head, the head must get a different color. This package computes
the resulting dichromatic number exactly (two independent ways), per-order
coloring numbers, the bounds and complete-partition numbers built on them,
and the L-matrix encoding of vertex-labeled digraphs.
"""

from .digraph import Digraph, UndirectedGraph, build_digraph, is_acyclic, underlying_graph
from .dichromatic import beta_oc, chi_d_exact, chi_d_ordering_oracle, is_valid_coloring, realize_order
from .lmatrix import LabeledDigraph, decode, encode, validate
from .sequences import SequenceColoring, s_number_exact, s_number_greedy, validate_sequence_coloring

__all__ = [
    "Digraph",
    "LabeledDigraph",
    "SequenceColoring",
    "UndirectedGraph",
    "beta_oc",
    "build_digraph",
    "chi_d_exact",
    "chi_d_ordering_oracle",
    "decode",
    "encode",
    "is_acyclic",
    "is_valid_coloring",
    "realize_order",
    "s_number_exact",
    "s_number_greedy",
    "underlying_graph",
    "validate",
    "validate_sequence_coloring",
]
