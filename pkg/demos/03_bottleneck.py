# %% [markdown]
# # Bottleneck distance between barcodes
#
# A barcode is a multiset of rectangles. Bars are either paired up, costing
# their interleaving distance, or left alone, costing their distance to zero.
# The bottleneck distance is the best achievable worst cost.

# %%
import random

import numpy as np

from rectdist import bottleneck_distance, build_cost_matrix, matching_cost, parse_barcode
from rectdist.bottleneck import matching_to_json
from rectdist.sampling import random_barcode

A = parse_barcode("""
(0,2) x (0,2)
(0,10) x (0,1)     # thin: cheap to drop
""")
B = parse_barcode("(1,3) x (1,3)\n")

value, sigma = bottleneck_distance(A, B)
print("d_B =", value)
print(matching_to_json(sigma, len(A), len(B)))

# %% [markdown]
# The cost matrix holds everything the min-max looks at. The returned
# matching attains the value exactly.

# %%
cm = build_cost_matrix(A, B)
print([[str(c) for c in row] for row in cm.pair_cost], [str(c) for c in cm.left_zero])
assert matching_cost(cm, sigma) == value

# %% [markdown]
# Larger inputs: the threshold search only needs a logarithmic number of
# bipartite matchings, so a few hundred bars take well under a second.

# %%
rng = random.Random(0)
big_a = random_barcode(rng, 300, 2, -50, 50, inf_prob=0.0)
big_b = random_barcode(rng, 300, 2, -50, 50, inf_prob=0.0)
value, sigma = bottleneck_distance(big_a, big_b)
big_cm = build_cost_matrix(big_a, big_b)
costs = np.array([float(big_cm.pair_cost[i][j].fraction) for i, j in sigma.pairs])
print("d_B =", value, "| matched", len(sigma), "| median matched cost", np.median(costs))
