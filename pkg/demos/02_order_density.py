# # Majorizing but not order dense
#
# Two subspaces of the K4 space whose images majorize their smallest
# extensions in the cover without being order dense there.

# %%
from rieszcover.fixtures import k4_space
from rieszcover import fdspace as fd
from rieszcover.exact.linalg import Subspace
from rieszcover.exact.rational import fmt_vec


def fmt(v):
    return "(" + ",".join(fmt_vec(v)) + ")"

space = k4_space()
v1, v2, v4 = (1, 0, 1), (0, 1, 1), (0, -1, 1)

# %% [markdown]
# ## The ideal generated by v1 and v4
#
# It is the kernel of the fourth functional.  Its smallest extension ideal in
# Q^4 is the first three coordinates.

# %%
I = fd.ideal_generated(space, [v1, v4]).subspace
J = fd.extension_ideal(space, [v1, v4]).subspace
L = space.image(I)
print("I =", I, " directed:", fd.is_directed(space, I))
print("extension ideal =", J)
print("majorizing:", fd.is_majorizing(space, L, J))

# %% [markdown]
# Every element of i(I) above z = (1,0,1,0) is at least (1,2,1,0), so z is not
# the infimum of what lies above it.

# %%
z = (1, 0, 1, 0)
print("inf{x in i(I) : x >= z} =", fmt(fd.inf_upper_set(space, L, z)))
res = fd.is_order_dense(space, L, J, z)
print("order dense:", res.dense, " witness:", fmt(res.witness))

# %% [markdown]
# Without a suggested point the decider tries the unit vectors of J and
# reports the first failure.

# %%
res = fd.is_order_dense(space, L, J)
print("witness:", fmt(res.witness), " F(witness):", fmt(res.upper))

# %% [markdown]
# ## The band span{v2}
#
# Its image is the line through (0,0,1,1).  Nothing on that line sits just
# above (0,0,0,1).

# %%
B = Subspace(3, [v2])
band, ok = fd.extension_band(space, [v2])
LB = space.image(B)
print("band:", fd.is_band(space, B), " cover band:", band.subspace, " restricts correctly:", ok)
print("majorizing:", fd.is_majorizing(space, LB, band.subspace))
res = fd.is_order_dense(space, LB, band.subspace, (0, 0, 0, 1))
print("order dense:", res.dense, " witness:", fmt(res.witness), " F:", fmt(res.upper))
