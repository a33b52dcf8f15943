import random
import warnings
from fractions import Fraction
from math import gcd

import pytest
from mpmath import mp

from conftest import REFERENCE_SHAPES

from etaq import (
    FrameShape,
    RademacherEvaluator,
    coprime_residues,
    dedekind_sum,
    kloosterman_like_sum,
    kloosterman_sum_complex,
    phase_table,
)

ETA_INV = FrameShape({1: -1})


def brute_force_sum(shape, k, n, dps=40):
    """Direct evaluation from the definition: naive Dedekind sums, one
    complex exponential per residue."""
    with mp.workdps(dps):
        total = mp.mpc(0)
        for h in range(k):
            if gcd(h, k) != 1:
                continue
            c = Fraction(0)
            for m, e in shape.entries:
                g = gcd(m, k)
                c += e * dedekind_sum((m // g) * h % (k // g), k // g)
            phase = Fraction(h * n, k) + c / 2
            total += mp.exp(-2j * mp.pi * (mp.mpf(phase.numerator) / phase.denominator))
        return total


def test_k1_is_one():
    for n in (-3, 0, 1, 17):
        assert kloosterman_like_sum(ETA_INV, 1, n) == 1


def test_k2_alternates():
    for n in range(-4, 8):
        expected = 1 if n % 2 == 0 else -1
        assert abs(kloosterman_like_sum(ETA_INV, 2, n) - expected) < mp.mpf(10) ** -40


def test_k3_matches_brute_force():
    got = kloosterman_sum_complex(ETA_INV, 3, 1)
    ref = brute_force_sum(ETA_INV, 3, 1)
    assert abs(got - ref) < 1e-30


def test_brute_force_random_shapes():
    rng = random.Random(314159)
    for _ in range(25):
        scales = rng.sample(range(1, 13), rng.randint(1, 3))
        entries = {m: rng.choice([-2, -1, 1, 2]) for m in scales}
        shape = FrameShape(entries)
        k = rng.randint(1, 24)
        n = rng.randint(0, 30)
        got = kloosterman_sum_complex(shape, k, n)
        ref = brute_force_sum(shape, k, n)
        assert abs(got - ref) < 1e-28


def test_evaluator_agrees_with_direct_sum():
    rng = random.Random(2718)
    for shape in REFERENCE_SHAPES[:3]:
        ev = RademacherEvaluator(shape)
        for _ in range(12):
            k = rng.randint(1, 60)
            n = rng.randint(1, 40)
            direct = kloosterman_sum_complex(shape, k, n)
            assert abs(ev.kloosterman_complex(n, k) - direct) < mp.mpf(10) ** -40


def test_realness_randomized():
    rng = random.Random(5005)
    tol = mp.mpf(10) ** -40
    for _ in range(20):
        scales = rng.sample(range(1, 15), rng.randint(1, 3))
        entries = {m: rng.choice([-3, -2, -1, 1, 2]) for m in scales}
        shape = FrameShape(entries)
        k = rng.randint(1, 50)
        n = rng.randint(0, 50)
        value = kloosterman_sum_complex(shape, k, n, precision=50)
        assert abs(value.imag) < tol


def test_bounded_by_residue_count():
    rng = random.Random(808)
    for _ in range(25):
        shape = FrameShape({rng.randint(1, 9): rng.choice([-2, -1, 1])})
        k = rng.randint(1, 40)
        n = rng.randint(0, 20)
        value = kloosterman_sum_complex(shape, k, n)
        assert abs(value) <= len(coprime_residues(k)) + mp.mpf(10) ** -40


def test_periodic_in_n():
    tol = mp.mpf(10) ** -40
    shape = FrameShape({1: -1, 22: -1})
    for k in (5, 11, 22, 36):
        for n in (0, 3, 19):
            a = kloosterman_like_sum(shape, k, n)
            b = kloosterman_like_sum(shape, k, n + k)
            assert abs(a - b) < tol


def test_phase_table_covers_coprimes_only():
    table = phase_table(FrameShape({2: -1}), 12)
    assert [h for h, _ in table] == [1, 5, 7, 11]
    table1 = phase_table(FrameShape({2: -1}), 1)
    assert [h for h, _ in table1] == [0]


def test_no_spurious_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        kloosterman_like_sum(FrameShape({1: -2, 11: -2}), 33, 7)


def test_diagnostic_on_lost_realness(monkeypatch):
    # corrupt the phase table so the sum is genuinely non-real: the
    # imaginary-residual diagnostic must fire
    import etaq.kloosterman as mod

    monkeypatch.setattr(mod, "phase_table", lambda shape, k: [(1, Fraction(1, 7))])
    with pytest.warns(RuntimeWarning, match="imaginary residual"):
        mod.kloosterman_like_sum(ETA_INV, 5, 1)


def test_validation():
    with pytest.raises(ValueError):
        phase_table(ETA_INV, 0)
