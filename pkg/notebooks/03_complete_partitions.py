"""
Complete partitions
===================

The achromatic number, its acyclic-class analogue and the Grundy number.
"""

from dicolor.digraph import Digraph, cycle_graph, path_graph, underlying_graph, wheel_graph
from dicolor.partitions import (
    achromatic_number,
    chain_check,
    chi_equals_psi_check,
    grundy_number,
    interpolation_check,
    psi_sd,
)

# %%
for name, G in [("P4", path_graph(4)), ("C5", cycle_graph(5)), ("C6", cycle_graph(6)), ("W5", wheel_graph(5))]:
    print(name, chi_equals_psi_check(G), grundy_number(G)[0])

# %%
# Every independent set is acyclic, so psi_sd can only be larger than psi.
D = Digraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
print(psi_sd(D), achromatic_number(underlying_graph(D)))

# %%
# All the numbers at once, with a verdict per inequality.
report = chain_check(D)
print(report.values)
print(report.failed)

# %%
print(interpolation_check(cycle_graph(6)).to_json())
