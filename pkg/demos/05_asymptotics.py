"""Leading-order growth estimates.

A single Bessel factor at the moduli maximizing c3(k)/k^2 already captures
the coefficient growth; the relative error decays exponentially in sqrt(n).
When the front sum degenerates (it can vanish identically for some n), the
estimate is flagged rather than trusted.
"""

from mpmath import nstr

from etaq import FrameShape, RademacherEvaluator, exact_coefficients

shape = FrameShape({1: -1})
evaluator = RademacherEvaluator(shape)
exact = exact_coefficients(shape, 400)

print("partition numbers vs their leading-order estimate:")
print(f"{'n':>4} {'estimate':>22} {'exact':>22} {'rel err':>10}")
for n in (10, 25, 50, 100, 200, 400):
    data = evaluator.asymptotic_estimate(n)
    rel = abs(data.estimate - exact[n]) / exact[n]
    print(f"{n:>4} {nstr(data.estimate, 12):>22} {exact[n]:>22} {nstr(rel, 3):>10}")

# a tied leading set: both k = 1 and k = 2 contribute at the front
shape2 = FrameShape({2: -1})
ev2 = RademacherEvaluator(shape2)
data = ev2.asymptotic_estimate(100)
print(f"\nshape {shape2}: leading set {data.leading_set}, "
      f"max c3(k)/k^2 = {data.c3_max}")
print("front sum at even n:", nstr(data.front_sum, 10))

# at odd n the two front terms cancel exactly: flagged as degenerate
odd = ev2.asymptotic_estimate(99)
print("front sum at odd n:", nstr(odd.front_sum, 5), "degenerate:", odd.degenerate)
