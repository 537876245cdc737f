"""
Coloring a digraph along a vertex order
=======================================

A head colored after its tail must get a new color. The order matters, and
the best order gives the dichromatic number.
"""

from dicolor.digraph import directed_cycle, random_dag
from dicolor.dichromatic import chi_d_exact, directed_cycle_two_coloring, is_valid_coloring
from dicolor.sequences import forward_constraint_graph, min_over_orders, s_number_greedy

# %%
# The directed triangle cannot be colored with one color in any order.
C = directed_cycle(3)
print(chi_d_exact(C))
print(min_over_orders(C, "exact"))

# Only the arcs pointing forward in the order constrain the coloring.
print(sorted(forward_constraint_graph(C, [0, 1, 2]).edges))

# %%
# A two-coloring of a longer directed cycle, written as (vertex, color) pairs.
seq = directed_cycle_two_coloring(7)
print(seq.to_json())

# %%
# Going the other way: given colors, find an order that realizes them.
ok, order = is_valid_coloring(directed_cycle(4), (1, 1, 2, 2))
print(ok, order)

# %%
# Acyclic digraphs need only one color, however large they are.
D = random_dag(40, 0.2, seed=1)
print(chi_d_exact(D)[0])

# First-fit along a bad order can still use many colors.
print(s_number_greedy(D, list(range(D.p)))[0])
