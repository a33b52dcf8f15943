"""Derived constants and the convergence-hypothesis checker.

The series representation is guaranteed when the growth exponent c1 is
positive and the polar margin g(k) is non-negative on one period.  Both
quantities are exact rationals, so the check is exact.
"""

from etaq import check_hypotheses, derive_constants, parse_shape

quotients = [
    "1^-3 4^-1",
    "1^-3 4^1",
    "2^-1",
    "1^-2 11^-2",
    "1^-1 22^-1",
    "1^-1 23^-1",
    "1^2",        # fails: c1 = -1
    "1^-1 2^1",   # boundary: c1 = 0
]

for text in quotients:
    shape = parse_shape(text)
    consts = derive_constants(shape)
    report = check_hypotheses(shape)
    print(f"shape {text!r:14} period {consts.period:3}  c1 = {str(report.c1):5} "
          f"min g = {str(report.min_g):7} satisfied = {report.satisfied}")

# the tables live on one period and repeat exactly
shape = parse_shape("2^-1")
consts = derive_constants(shape)
print("\nc3 table for 2^-1:", [str(v) for v in consts.c3])
print("c3 at k = 7 equals c3 at k = 7 + period:",
      consts.c3_at(7) == consts.c3_at(7 + consts.period))
