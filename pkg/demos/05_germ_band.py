# # Germs at 0: an ideal that is a band in one space and not in another
#
# X is spanned by piecewise affine functions constant near 0 together with
# q(t) = (t^2 - 1/4) outside ]-1/2, 1/2[ (0 inside).  B is the set of members
# vanishing on [-1, 0] and near 0.

# %%
from fractions import Fraction

from rieszcover.exact import Poly
from rieszcover.funcspace import (
    PPoly,
    SubspaceDescriptor,
    dcomp,
    ideal_extension_descriptor,
    named_carrier,
    q_function,
    rdp_probe_lp,
)

half = Fraction(1, 2)
dom = (-1, 1)
t = Poly.t()
B = SubspaceDescriptor([(-1, 0)], [0], named_carrier("X"))

# %% [markdown]
# In the piecewise-quadratic cover the germ condition survives in the
# extension ideal but not in its band: t+ separates them.

# %%
I_Y = ideal_extension_descriptor(B, named_carrier("PP2"))
B_Y = dcomp(dcomp(I_Y))
x = PPoly.poly(t, dom).pos()
print("ideal:", I_Y)
print("band: ", B_Y)
print("t+ in band:", B_Y.contains(x), " in ideal:", I_Y.contains(x))

# %% [markdown]
# In the quadratics that are constant near 0, vanishing at 0 already forces
# vanishing near 0, and the ideal is its own band.

# %%
I_R = ideal_extension_descriptor(B, named_carrier("Xrho"))
print("ideal = band:", I_R == dcomp(dcomp(I_R)))

# %% [markdown]
# ## No Riesz decomposition of q
#
# a1 and a2 are the two affine tails below q.  Note a1 + a2 <= q holds, and
# q <= a1 + a2 does not.  Splitting q = q1 + q2 inside X with q1 <= a1 and
# q2 <= a2 is ruled out by an LP on five probe points.

# %%
q = q_function(dom)
a1 = PPoly(dom, [-1, -half, 1], [-t - Poly.const(half), Poly()])
a2 = PPoly(dom, [-1, half, 1], [Poly(), t - Poly.const(half)])
print("q <= a1 + a2:", q.leq(a1 + a2), "  a1 + a2 <= q:", (a1 + a2).leq(q))
lp = rdp_probe_lp(q, a1, a2)
print("LP:", lp.status, lp.certificate)
