# # A directed ideal whose band is not directed
#
# Continuous functions on [-1, 1] with f(0) = (f(-1) + f(1)) / 2, restricted
# here to piecewise polynomials of degree at most 2.

# %%
from fractions import Fraction

from rieszcover.funcspace import (
    SubspaceDescriptor,
    band_generated_descriptor,
    directedness_certificate,
    named_carrier,
)

X = named_carrier("Namioka")
half = Fraction(1, 2)

# %% [markdown]
# I: members vanishing on [-1/2, 0] and at both ends.  Taking absolute values
# keeps the point relation (both sides are 0), so |f| dominates f inside I.

# %%
I = SubspaceDescriptor([(-half, 0), (-1, -1), (1, 1)], [], X)
print(I)
print(directedness_certificate(I, [-1, 0, 1]))

# %% [markdown]
# The band generated by I forgets the endpoint conditions.  The function
# below is -1 at -1, 0 on [-1/2, 0] and 1 at 1.  A g >= f, 0 would need
# g(-1) + g(1) = 2 g(0) = 0 and g(1) >= 1: a linear program with no solution.

# %%
B = band_generated_descriptor(I)
cert = directedness_certificate(B, [-1, 0, 1])
print(B)
print("f at -1, 0, 1:", [cert.f(t) for t in (-1, 0, 1)])
print("Farkas multipliers check out:", cert.verify(B))
print(cert.to_json()["certificate"])
