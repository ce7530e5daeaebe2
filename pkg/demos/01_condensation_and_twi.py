# %% [markdown]
# # Condensed forms and the twi-distance
#
# dtw treats a series and any of its "slowed down" versions (values
# repeated in place) as identical to the original, yet reacts to the
# repetitions when comparing against a third series. Collapsing every run
# to one value first removes that inconsistency.

# %%
import numpy as np

from warpinv import condense_series, dtw, speedup_factors, series_space_saving, twi

x = np.array([0.0, 1.0])
x_slow = np.array([0.0, 1.0, 1.0])
y = np.array([0.0, 2.0])

print("dtw(x, x_slow) =", dtw(x, x_slow).distance)  # 0: x_slow is an expansion of x
print("dtw(x, y)      =", dtw(x, y).distance)
print("dtw(x_slow, y) =", dtw(x_slow, y).distance)  # larger, although x ~ x_slow
print("twi(x_slow, y) =", twi(x_slow, y))  # same as twi(x, y)

# %% [markdown]
# An optimal alignment can be recovered too. Points are 1-based grid cells.

# %%
res = dtw(x_slow, y, want_path=True)
print(res.path)

# %% [markdown]
# ## What condensation buys
#
# A plateau-heavy series of length 720 can shrink to a few dozen values.
# Quadratic dtw cost then drops by the product of both shrink factors.

# %%
rng = np.random.default_rng(0)
levels = rng.normal(size=25)
a = np.repeat(levels, rng.multinomial(720 - 25, np.ones(25) / 25) + 1)
levels = rng.normal(size=35)
b = np.repeat(levels, rng.multinomial(720 - 35, np.ones(35) / 35) + 1)
ca, cb = condense_series(a), condense_series(b)
print(len(a), "->", len(ca), f"(saves {series_space_saving(len(a), len(ca)):.1%})")
print(len(b), "->", len(cb), f"(saves {series_space_saving(len(b), len(cb)):.1%})")
print("expected speed-up (pre-condensed): %.1f" % speedup_factors(len(a), len(b), len(ca), len(cb))[1])
print("twi =", twi(a, b), " dtw =", dtw(a, b).distance)
