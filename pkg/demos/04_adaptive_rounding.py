"""Adaptive integer rounding of the series.

The evaluator grows N until two consecutive partial sums agree on the same
integer (within 0.1) and returns it; the result always matches the exact
oracle or the evaluator refuses with NotConvergedError.
"""

from etaq import (
    FrameShape,
    NotConvergedError,
    RademacherEvaluator,
    estimate_coefficient,
    exact_coefficients,
)

# partition numbers, analytically
shape = FrameShape({1: -1})
evaluator = RademacherEvaluator(shape)
print("p(n) from the series:", [evaluator.estimate_coefficient(n) for n in range(1, 13)])
print("p(n) from the oracle:", exact_coefficients(shape, 12)[1:])

print("p(100) =", evaluator.estimate_coefficient(100))
print("p(200) =", evaluator.estimate_coefficient(200))

# a slowly converging quotient still rounds correctly
slow = FrameShape({1: -1, 23: -1})
exact = exact_coefficients(slow, 20)
got = [estimate_coefficient(slow, n) for n in range(2, 21)]
print("\n1/(eta(tau) eta(23 tau)): series", got)
print("                          oracle", exact[2:])

# an impossible budget raises instead of guessing
try:
    estimate_coefficient(shape, 10, n_cap=1)
except NotConvergedError as exc:
    print("\ncapped run:", exc)
