"""Sums versus differences on the classic 8-element set.

Addition commutes and subtraction does not, so one might guess a finite set
always has at least as many pairwise differences as sums. The set below is
the standard counterexample, and the package computes both sides exactly.
"""

from addcomb import (
    CANONICAL_MSTD8,
    DIFFERENCE_FORM,
    SUM_FORM,
    LinearForm,
    form_image,
    is_mstd,
    rep_function,
)

A = CANONICAL_MSTD8
print("A =", A)

sums = form_image(SUM_FORM, A)
diffs = form_image(DIFFERENCE_FORM, A)
print("\nA+A =", sums.image)
print("|A+A| =", sums.size)
print("|A-A| =", diffs.size)

verdict = is_mstd(A)
print("\nmore sums than differences?", verdict.is_mstd)

# The gap is driven by which values are missing: 26 sums fill [0, 28]
# except three holes, while the 25 differences sit symmetrically in
# [-14, 14] with four holes.
missing_sums = [x for x in range(29) if x not in sums.multiplicities]
missing_diffs = [x for x in range(-14, 15) if x not in diffs.multiplicities]
print("missing sums:", missing_sums)
print("missing differences:", missing_diffs)

# Representation counts: how many ordered pairs produce each value.
for x in (0, 1, 14):
    print(f"r(A, {x}) = {rep_function(SUM_FORM, A, x)} ordered pairs")

# Longer forms work the same way; with three variables the plus and
# minus-one-slot images happen to have equal size on this set.
triple = form_image(LinearForm((1, 1, 1)), A)
mixed = form_image(LinearForm((1, 1, -1)), A)
print("\n|A+A+A| =", triple.size, " |A+A-A| =", mixed.size)
