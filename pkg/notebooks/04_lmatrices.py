"""
L-matrices
==========

Encode a labeled digraph, check the triple conditions, and decode it again.
"""

import numpy as np

from dicolor.digraph import directed_cycle
from dicolor.lmatrix import (
    LabeledDigraph,
    acyclic_color_matrix_semantic,
    all_candidate_matrices,
    decode,
    encode,
    pretty,
    validate,
)

# %%
ld = LabeledDigraph(directed_cycle(3), (1, 2, 1))
M = encode(ld)
print(pretty(M))
print(decode(M).label_classes())

# %%
# A single changed entry breaks the same-label relation.
bad = M.copy()
bad[0, 1] = -1
print(validate(bad))

# %%
# Of all 4096 order-3 candidates, count those that are genuine L-matrices.
print(sum(validate(A)[0] for A in all_candidate_matrices(3)))

# %%
# The entry-wise test for an acyclic one-class matrix also accepts a directed triangle.
print(acyclic_color_matrix_semantic(encode(LabeledDigraph(directed_cycle(3), (1, 1, 1)))).to_json())
print(np.asarray(encode(LabeledDigraph(directed_cycle(3), (1, 1, 1)))))
