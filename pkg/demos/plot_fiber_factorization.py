"""
Splitting a fiber surface
=========================

Over a fixed w the degree-10 surface delta^2 (1 - 3w/2^7) = P^2 w/2^5 is a
product of two quintics.
"""
from fractions import Fraction
from dworklines.dwork import fiber_factorization, BranchPoint

fac = fiber_factorization(Fraction(1, 3))
print("formal square roots:", fac.relations)
print("product matches:", fac.product() == fac.target())

num = fiber_factorization(0.5, precision_bits=96)
print("numeric factor coefficients are balls, e.g.", next(iter(num.factors[0].terms.values())))

for w in (0, Fraction(128, 3)):
    try:
        fiber_factorization(w)
    except BranchPoint as exc:
        print("w =", w, "->", exc)
