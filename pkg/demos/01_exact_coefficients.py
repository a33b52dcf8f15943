"""Exact integer coefficients from the q-series oracle.

Every quotient is a finite product of rescaled eta factors; its expansion
coefficients are integers, and big-integer series arithmetic produces them
exactly at any order.
"""

from etaq import FrameShape, derive_constants, exact_coefficients, parse_shape

# the reciprocal eta series gives the partition numbers
partitions = exact_coefficients(FrameShape({1: -1}), 20)
print("p(0..20) =", partitions)

# dilating the scale interleaves zeros: coefficients of 1/eta(2 tau)
print("d(0..12) for 2^-1 =", exact_coefficients(FrameShape({2: -1}), 12))

# a genuine quotient: eta(4 tau) / eta(tau)^3
shape = parse_shape("1^-3 4^1")
coeffs = exact_coefficients(shape, 12)
n0 = derive_constants(shape).n0
print(f"shape {shape}, expansion offset {n0}")
for n, d in enumerate(coeffs):
    print(f"  d({n}) = {d}")

# coefficients grow fast; exact arithmetic keeps every digit
big = exact_coefficients(FrameShape({1: -1}), 500)[500]
print("p(500) =", big)
