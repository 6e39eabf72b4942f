"""Products versus quotients, and the bridge to sums versus differences.

Exponentiation turns sums into products and differences into quotients, so
any set with more sums than differences yields a set of positive integers
with more products than quotients, exactly and with identical counts.
"""

from addcomb import (
    CANONICAL_MSTD8,
    FiniteSet,
    exp_transport,
    is_mstd,
    log_transport,
    product_quotient_counts,
)

A = CANONICAL_MSTD8
B = exp_transport(A, 2)
print("A =", A)
print("2^A =", B)

add = is_mstd(A)
mul = product_quotient_counts(B)
print("\nadditive counts:      ", add.sum_count, "sums,", add.diff_count, "differences")
print("multiplicative counts:", mul.product_count, "products,", mul.quotient_count, "quotients")
print("MPTQ:", mul.is_mptq)

# The transport is exactly invertible.
print("\nlog base 2 round-trips:", log_transport(B, 2) == A)

# Quotient sets always have odd size: they contain 1 and are closed under
# inversion, pairing every other element with its reciprocal.
for els in ([1, 2, 4], [2, 3], [5]):
    v = product_quotient_counts(exp_transport(FiniteSet(els), 3))
    print(f"3^{els}: products {v.product_count}, quotients {v.quotient_count}")
