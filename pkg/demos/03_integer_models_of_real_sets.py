"""Three ways to replace real numbers by positive integers without touching
any additive coincidence.

Irrational inputs are written as exact rational coordinates over a declared
basis, here (1, sqrt2). Each construction returns a positive integer set
together with a certificate: an exhaustive exact check that the pairing
preserves all form coincidences in both directions.
"""

from addcomb import BasisDecl, FiniteSet, SUM_FORM, is_mstd, realize
from fractions import Fraction

basis = BasisDecl(("1", "sqrt2"), (1.0, 1.4142135623730951))
rt2 = basis.unit("sqrt2")

A = FiniteSet([0 * rt2, 1 + 0 * rt2, rt2])
print("A =", A, "(three reals: 0, 1, sqrt2)")

for method in ("group", "dirichlet", "lp"):
    r = realize(A, SUM_FORM, method)
    print(f"\n{method:>9}: B = {r.B}")
    print(f"           params = {r.params}")
    print(f"           certificate passed = {r.certificate.is_isomorphism}")

# The routes differ in spirit:
#   group      scales coordinates integral and encodes Z^2 into Z in a base
#              large enough that digits never interact;
#   dirichlet  finds q with q*0, q*1, q*sqrt2 all near integers, close
#              enough that integer-side coincidences cannot lie;
#   lp         writes every tuple-pair relation as an exact constraint and
#              hands the system to a rational phase-1 simplex.

# Whatever the route, counting statistics transfer exactly. Scale the
# 8-point MSTD set by 1/2 and shift it by sqrt2: the image is irrational,
# yet its integer model keeps the 26-to-25 imbalance.
eight = FiniteSet(basis.element((Fraction(a, 2), 1)) for a in (0, 2, 3, 4, 7, 11, 12, 14))
r = realize(eight, SUM_FORM, "group")
v = is_mstd(r.B)
print("\ninteger model of (1/2)*A8 + sqrt2:", r.B)
print("sums", v.sum_count, "diffs", v.diff_count, "MSTD", v.is_mstd)
