# # A band of C^1 functions that does not majorize its extension
#
# On [0, 1], take C^1 piecewise quadratics vanishing on [0, 1/2].  The kink
# g = (t - 1/2)+ belongs to the extension band among all piecewise
# quadratics, but nothing C^1 in the band can sit above it.

# %%
from fractions import Fraction

from rieszcover.exact import Poly
from rieszcover.funcspace import (
    PPoly,
    band_generated_descriptor,
    c1_bump,
    membership_witness_majorized,
    named_carrier,
    order_density_witness,
)

half = Fraction(1, 2)
dom = (0, 1)
C1 = named_carrier("C1PP2")
s = c1_bump(half, 1, 1, dom)
B = band_generated_descriptor([s], C1)
print("generator:", s)
print("band:", B)

# %%
t = Poly.t()
g = PPoly.poly(t - Poly.const(half), dom).pos()
res = membership_witness_majorized(g, B)
print(res.certificate)

# %% [markdown]
# The certificate: any C^1 member has f(1/2) = f'(1/2) = 0, so near 1/2 it is
# c (t - 1/2)^2, which loses to t - 1/2.  Dropping the C^1 condition, g
# dominates itself.

# %%
B_hat = B.with_carrier(named_carrier("PP2", dom))
print(membership_witness_majorized(g, B_hat))
gap = order_density_witness(B, B_hat, g)
print("gap at", gap.point, "of size", gap.margin)
