"""Coincidence-preserving bijections and what they force.

A bijection f between two finite sets preserves a form when tuples share a
value on one side exactly when their images share a value on the other.
For the two-variable sum this is the classical Freiman isomorphism. The
checker compares the two coincidence partitions exhaustively and returns a
witness pair when they differ.
"""

from fractions import Fraction

from addcomb import (
    CANONICAL_MSTD8,
    SUM_FORM,
    FiniteSet,
    SetBijection,
    affine_image,
    affine_reconstruct,
    classify_mstd8,
    induced_bijection,
    is_phi_isomorphism,
)

A = CANONICAL_MSTD8
reflected = affine_image(A, -1, 14)
print("A =", A)
print("14 - A =", reflected)

# x -> 14 - x preserves sums: a + a' = b + b' iff (14-a)+(14-a') = (14-b)+(14-b')
mirror = SetBijection.from_function(A, reflected, lambda x: 14 - x)
print("mirror is a sum-isomorphism:", is_phi_isomorphism(SUM_FORM, mirror).is_isomorphism)

# A failing example, with the first offending pair of index tuples.
f = SetBijection.by_order(FiniteSet([0, 1, 2]), FiniteSet([0, 1, 3]))
verdict = is_phi_isomorphism(SUM_FORM, f)
print("\n{0,1,2} -> {0,1,3} verdict:", verdict)

# An isomorphism induces a bijection between the image sets that carries
# multiplicities along. For the mirror map it is x -> 28 - x.
F = induced_bijection(SUM_FORM, mirror)
print("\ninduced map on three sample values:", [(x, y) for x, y, _ in F.pairs[:3]])

# Sum-coincidences on this particular 8-point set force any isomorphism
# into a 2-divisible group to be affine, with slope (f(2)-f(0))/2.
r = affine_reconstruct(mirror)
print("\nreconstructed map: x ->", f"{r.lam}*x + {r.mu}", "| matches all points:", r.matches)

# Consequently every 8-element MSTD set normalizes onto A or its mirror.
scaled = affine_image(A, Fraction(7, 3), -11)
print("\nclassify (7/3)*A - 11:", classify_mstd8(scaled))
print("classify 14 - A:      ", classify_mstd8(reflected))
