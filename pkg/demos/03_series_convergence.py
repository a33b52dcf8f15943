"""Partial sums of the Bessel series against the exact coefficients.

The analytic series converges to the same integers the oracle produces;
convergence is visibly haphazard term by term, which is why the partial-sum
table keeps every term.
"""

from mpmath import mp, nstr

from etaq import (
    RademacherEvaluator,
    exact_coefficients,
    parse_shape,
)

shape = parse_shape("2^-1")
exact = exact_coefficients(shape, 8)
evaluator = RademacherEvaluator(shape, precision=50)

print(f"shape {shape}: d(n, N) vs exact d(n)")
print(f"{'n':>3} {'N=1':>12} {'N=5':>12} {'N=25':>12} {'N=100':>12} {'exact':>7}")
for n in range(1, 9):
    table = evaluator.term_table(n, 100)
    sums = table.partial_sums()
    row = [nstr(sums[N - 1], 8) for N in (1, 5, 25, 100)]
    print(f"{n:>3} {row[0]:>12} {row[1]:>12} {row[2]:>12} {row[3]:>12} {exact[n]:>7}")

# the error of the best partial sum keeps improving even when single steps
# move the wrong way
n = 6
errors = [abs(s - exact[n]) for s in evaluator.term_table(n, 60).partial_sums()]
best = mp.mpf("inf")
print(f"\nbest-so-far |d({n},N) - d({n})|:")
for N, err in enumerate(errors, start=1):
    if err < best:
        best = err
        if N in (1, 2, 3, 5, 10, 20, 40, 60) or N < 4:
            print(f"  N = {N:3}: {nstr(err, 6)}")
