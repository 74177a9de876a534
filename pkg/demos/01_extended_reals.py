# %% [markdown]
# # Exact arithmetic with infinite endpoints
#
# Rectangle endpoints live in the rationals extended by +inf and -inf.
# Floats never enter: every value is a `fractions.Fraction` or an infinity,
# so distances come out exact.

# %%
from rectdist import NEG_INF, POS_INF, ext, parse_ext
from rectdist.extended_reals import UndefinedArithmetic, add, halve, max_norm_dist, sub

# %% [markdown]
# Decimals are read exactly, so `0.1` really is one tenth.

# %%
print(parse_ext("0.1"), parse_ext("-3/6"), parse_ext("inf"))
print(ext(1) + ext("1/3"))

# %% [markdown]
# Infinity minus the same infinity is taken to be 0. This is what makes two
# bars that both run off to +inf sit at finite distance from each other.

# %%
print(sub(POS_INF, POS_INF), sub(NEG_INF, NEG_INF), halve(POS_INF))
print(max_norm_dist([ext(0), POS_INF], [ext(1), POS_INF]))

# %% [markdown]
# Adding infinities of opposite sign has no sensible value and raises.

# %%
try:
    add(POS_INF, NEG_INF)
except UndefinedArithmetic as exc:
    print("refused:", exc)
