# %% [markdown]
# # Words, warping functions and walks
#
# Series are words over the reals. Replicating letters gives expansions,
# and every warping path factors into two warping functions that expand
# the two series to equal length.

# %%
from warpinv import words
from warpinv.warping import (
    WarpingFunction,
    compose_walks,
    enumerate_paths,
    pullback_equalizer,
    walk_to_functions,
)

print(words.prime_factorize("aabccc"))
print(words.condense("aabccc"))
print(sorted("".join(w) for w in words.enumerate_expansions("ab", 4)))
print(words.common_compression("aabbb", "abb"))

# %% [markdown]
# Every warping path of a 3 x 3 grid, and the two functions behind one of them.

# %%
paths = list(enumerate_paths(3, 3))
print(len(paths), "paths")
phi, psi = walk_to_functions(paths[5], (3, 3))
print(paths[5], phi.values, psi.values)

# %% [markdown]
# Two warping functions into the same set can be equalized by composing
# each with a further warping function. This is what makes "has dtw zero
# to" a transitive relation: zero-cost alignments can be chained.

# %%
phi = WarpingFunction((1, 1, 2), 2)
phi2 = WarpingFunction((1, 2, 2, 2), 2)
theta, theta2 = pullback_equalizer(phi, phi2)
print(theta.values, theta2.values, phi.compose(theta).values, phi2.compose(theta2).values)

xy = ((1, 1), (2, 1), (3, 2))  # x = (0, 0, 1) against y = (0, 1)
yz = ((1, 1), (2, 2), (2, 3))  # y = (0, 1) against z = (0, 1, 1)
print(compose_walks(xy, (3, 2), yz, (2, 3)))
