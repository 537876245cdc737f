"""
Bounds on the dichromatic number
================================

Compare chi_d with the largest acyclic set, the underlying chromatic number
and two in-degree bounds on a seeded ensemble.
"""

from collections import Counter

from dicolor.bounds import has_odd_symmetric_cycle, sandwich_check
from dicolor.digraph import Digraph, paley_tournament, sample_digraphs

# %%
report = sandwich_check(Digraph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]))
print(report.to_json())

# The in-degree bound p - Delta_in is 1 here, yet the triangle needs 2 colors.
print(report.violations)

# %%
# How often does each inequality fail on random digraphs?
tally = Counter()
for D in sample_digraphs(500, 3, 8, seed=0):
    tally.update(sandwich_check(D).violations)
print(dict(tally))

# %%
# The quadratic-residue tournament on 7 vertices has no symmetric arcs at all
# but still needs three acyclic classes.
T = paley_tournament(7)
print(has_odd_symmetric_cycle(T), sandwich_check(T).chi_d)
