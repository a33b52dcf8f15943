import random
from fractions import Fraction
from math import gcd

from conftest import REFERENCE_SHAPES

from etaq import FrameShape, check_hypotheses, derive_constants


def test_single_eta_inverse():
    c = derive_constants(FrameShape({1: -1}))
    assert c.n0 == Fraction(1, 24)
    assert c.c1 == Fraction(1, 2)
    assert c.period == 1
    assert c.c2_squared == (Fraction(1),)
    assert c.c3 == (Fraction(1),)
    assert c.g == (Fraction(23, 24),)


def test_dilated_eta_inverse():
    c = derive_constants(FrameShape({2: -1}))
    assert c.n0 == Fraction(1, 12)
    assert c.c1 == Fraction(1, 2)
    assert c.period == 2
    assert c.c3 == (Fraction(1, 2), Fraction(2))
    assert c.g == (Fraction(23, 48), Fraction(23, 12))


def test_two_scale_quotient():
    c = derive_constants(FrameShape({1: -3, 4: -1}))
    assert c.n0 == Fraction(7, 24)
    assert c.c1 == Fraction(2)


def test_c1_is_half_integer_and_c2sq_positive():
    rng = random.Random(77)
    for _ in range(80):
        scales = rng.sample(range(1, 16), rng.randint(1, 4))
        entries = {m: rng.choice([-3, -2, -1, 1, 2, 3]) for m in scales}
        c = derive_constants(FrameShape(entries))
        assert c.c1.denominator in (1, 2)
        assert all(v > 0 for v in c.c2_squared)
        assert (2 * c.c1).denominator == 1


def test_tables_extend_periodically():
    shape = FrameShape({2: -1, 3: 2})
    c = derive_constants(shape)
    for k in range(1, 4 * c.period + 1):
        assert c.c3_at(k) == c.c3_at(k + c.period)
        assert c.c2_squared_at(k) == c.c2_squared_at(k + c.period)
        assert c.g_at(k) == c.g_at(k + c.period)


def test_tables_match_direct_formula_beyond_period():
    shape = FrameShape({1: -2, 11: -2})
    c = derive_constants(shape)
    for k in (13, 22, 37, 121):
        c3_direct = -sum(
            e * Fraction(gcd(m, k) ** 2, m) for m, e in shape.entries
        )
        assert c.c3_at(k) == c3_direct


def test_hypotheses_simple_shapes():
    assert check_hypotheses(FrameShape({1: -1})).satisfied
    assert check_hypotheses(FrameShape({2: -1})).satisfied


def test_hypotheses_reference_shapes():
    for shape in REFERENCE_SHAPES:
        report = check_hypotheses(shape)
        assert report.satisfied, f"{shape} should satisfy the hypotheses"


def test_hypotheses_negative_c1():
    report = check_hypotheses(FrameShape({1: 2}))
    assert not report.c1_positive
    assert report.c1 == Fraction(-1)
    assert not report.satisfied


def test_boundary_g_zero_counts_as_satisfied():
    # both shapes sit exactly at min g = 0
    for shape in (FrameShape({1: -2, 11: -2}), FrameShape({1: -1, 23: -1})):
        report = check_hypotheses(shape)
        assert report.min_g == 0
        assert report.g_nonnegative
        assert report.satisfied


def test_report_consistency():
    report = check_hypotheses(FrameShape({1: 1, 2: -4}))
    assert report.satisfied == (report.c1_positive and report.g_nonnegative)
