# %% [markdown]
# # Checking the closed form against brute force
#
# The oracle never uses the formula. It builds both modules on a finite grid,
# tries every candidate pair of maps, and tests the interleaving diagrams
# directly. Scanning candidate eps values gives an independent distance.

# %%
import random

from rectdist import interleaving_distance
from rectdist.oracle import (
    enumerate_bottleneck,
    grid_interleaving_check,
    oracle_interleaving_distance,
)
from rectdist.sampling import random_barcode, random_rectangle
from rectdist import bottleneck_distance, parse_rectangle

R = parse_rectangle("(0,2) x (0,2)")
Q = parse_rectangle("(1,3) x (1,3)")
for eps in ("1/2", "3/4", "1"):
    print(f"eps={eps}: interleaved={grid_interleaving_check(R, Q, eps)}")

# %% [markdown]
# Random agreement test in three parameters.

# %%
rng = random.Random(1)
mismatches = 0
for _ in range(100):
    r, q = random_rectangle(rng, 3), random_rectangle(rng, 3)
    mismatches += interleaving_distance(r, q) != oracle_interleaving_distance(r, q)
print("mismatches in 100 dim-3 pairs:", mismatches)

# %% [markdown]
# Small barcodes can be matched by trying every partial bijection.

# %%
a, b = random_barcode(rng, 5, 2), random_barcode(rng, 4, 2)
print(bottleneck_distance(a, b).value, enumerate_bottleneck(a, b))
