# %% [markdown]
# # Interleaving distance between two rectangles
#
# A rectangle module is one-dimensional on an open box in R^n and zero
# elsewhere. Two such modules are compared in one of two ways: slide one box
# onto the other, or kill both. The distance is the cheaper of the two.

# %%
from rectdist import interleaving_distance, parse_rectangle, zero_distance
from rectdist.rectangles import admits_nontrivial_morphism, triviality_threshold

R = parse_rectangle("(0,2) x (0,2)")
Q = parse_rectangle("(1,3) x (1,3)")

# %% [markdown]
# Killing a box costs half its shortest side, so both squares die at 1.
# Sliding R onto Q moves every corner by 1 as well.

# %%
print("threshold", triviality_threshold(R), "zero distance", zero_distance(R))
print("d_I(R, Q) =", interleaving_distance(R, Q))

# %% [markdown]
# Thin boxes are cheap to kill even when far apart.

# %%
thin_a = parse_rectangle("(0,1) x (0,10)")
thin_b = parse_rectangle("(100,101) x (0,10)")
print("d_I(thin_a, thin_b) =", interleaving_distance(thin_a, thin_b))

# %% [markdown]
# Quadrants never die, so only sliding is available.

# %%
print(interleaving_distance(parse_rectangle("(0,inf) x (0,inf)"),
                            parse_rectangle("(1,inf) x (1,inf)")))

# %% [markdown]
# A non-zero morphism from R into Q shifted by eps exists only when Q sits
# "later" than R by at most eps and the two still overlap after the shift.

# %%
for eps in (0, 1, 3):
    print(eps, admits_nontrivial_morphism(R, Q, eps))
