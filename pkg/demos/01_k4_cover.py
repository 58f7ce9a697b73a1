# # The K4 cone and its lattice cover
#
# Q^3 ordered by the cone over a square.  Its four extremal dual rays give an
# embedding into Q^4 with the coordinatewise order, and that embedding is where
# disjointness, bands and ideals become easy to read off.

# %%
from rieszcover import fdspace as fd
from rieszcover.cone import PolyCone
from rieszcover.exact.linalg import Subspace
from rieszcover.exact.rational import fmt_vec


def fmt(v):
    return "(" + ",".join(fmt_vec(v)) + ")"

v1, v2, v3, v4 = (1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)
K4 = PolyCone.from_generators([v1, v2, v3, v4], 3)
space = fd.build_space(K4, [(-1, -1, 1), (1, -1, 1), (1, 1, 1), (-1, 1, 1)])
print(space)

# %% [markdown]
# build_space has already checked that {x : i(x) >= 0} is K4 and that i(X)
# is order dense in Q^4.  The images of the rays:

# %%
for name, v in zip(("v1", "v2", "v3", "v4"), (v1, v2, v3, v4)):
    print(f"i({name}) = {fmt(space.embed(v))}")

# %% [markdown]
# Two elements are disjoint exactly when their images have disjoint supports.
# The definition inside X (equal upper-bound sets of +-(x+y) and +-(x-y))
# gives the same answers.

# %%
for x, y in [(v2, v4), (v1, v4), (v1, v3)]:
    print(x, y, fd.disjoint_def(space, x, y), fd.disjoint_coord(space, x, y))

# %% [markdown]
# The band generated by {v1, v4} is all of X, but the band generated by their
# images only restricts to span{v1, v4}.  So bands do not extend, and the space
# is not fordable.

# %%
S = [v1, v4]
print("band in X:", fd.band_generated(space, S).subspace)
band, ok = fd.extension_band(space, S)
print("cover band:", band.subspace, "restricts to", fd.restrict(space, band.subspace), "ok =", ok)
print("fordable:", fd.is_fordable(space), " pervasive:", fd.is_pervasive(space))
print("every nonzero band is a line:", [fd.band_generated(space, [v]).subspace.dim for v in (v1, v2, v3, v4)])
print("coordinate bands restrict to bands:", fd.is_band(space, fd.restrict(space, Subspace.coordinate(4, [0, 1, 2]))))
