"""Convergent Bessel-series evaluation of eta-quotient coefficients.

The N-th partial sum of the series is

    d(n, N) = 2 pi (1/(24(n-n0)))^((c1+1)/2)
              * sum over k <= N with c3(k) > 0 of
                c2(k) c3(k)^((c1+1)/2) A_k(n) k^-1
                * I_(1+c1)[(pi/k) sqrt((2/3) c3(k) (n-n0))]

with A_k(n) the Kloosterman-like sum.  Terms with c3(k) <= 0 contribute
exactly zero and are skipped without evaluating anything.

``RademacherEvaluator`` owns all per-shape caches (phase tables, A_k values,
terms), so repeated queries across n and N share the expensive exact
Dedekind-sum work.  Every cache is instance-confined: evaluations of
distinct shapes are independent, and a fixed evaluator accumulates partial
sums in ascending k, making results reproducible bit-for-bit at a fixed
precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from operator import index

from mpmath import mp

from .bessel import bessel_i
from .constants import DerivedConstants, check_hypotheses, derive_constants
from .kloosterman import phase_table
from .precision import DEFAULT_PRECISION, to_mpf, working
from .shapes import FrameShape

DEFAULT_N_CAP = 5000

# integer-rounding stopping rule: two consecutive partial sums within
# ROUND_WINDOW of the same integer, final distance below ROUND_ACCEPT
ROUND_WINDOW = 0.1
ROUND_ACCEPT = 0.4


class NotConvergedError(RuntimeError):
    """The adaptive rounding rule was not met by the term cap."""

    def __init__(self, n: int, n_cap: int):
        super().__init__(
            f"partial sums did not settle on an integer for n={n} "
            f"within N={n_cap} terms"
        )
        self.n = n
        self.n_cap = n_cap


class HypothesesNotSatisfiedError(ValueError):
    """The shape fails the convergence hypotheses and force was not set."""


@dataclass(frozen=True)
class RademacherTermTable:
    """All series terms for one (shape, n) up to some N.

    ``partial_sum(N)`` is prefactor times the ascending sum of the first N
    terms, accumulated at the precision the table was built with; terms at
    k with c3(k) <= 0 are exactly zero.
    """

    shape: FrameShape
    n: int
    prefactor: object
    terms: tuple
    precision: int = DEFAULT_PRECISION

    def partial_sum(self, N: int):
        if not 1 <= N <= len(self.terms):
            raise ValueError(f"N must be in [1, {len(self.terms)}], got {N}")
        with working(self.precision):
            acc = mp.mpf(0)
            for t in self.terms[:N]:
                acc += t
            return self.prefactor * acc

    def partial_sums(self) -> list:
        """d(n, N) for N = 1..len(terms), accumulated in ascending k."""
        with working(self.precision):
            out = []
            acc = mp.mpf(0)
            for t in self.terms:
                acc += t
                out.append(self.prefactor * acc)
            return out


@dataclass(frozen=True)
class AsymptoticData:
    """Leading-order estimate data: the argmax set of c3(k)/k^2, the maximal
    ratio, the assembled estimate and its front factor, plus a degeneracy
    flag raised when the front factor falls below the configured threshold."""

    leading_set: tuple[int, ...]
    c3_max: Fraction
    estimate: object
    front_sum: object
    degenerate: bool


def admissible_n(consts: DerivedConstants) -> int:
    """Smallest positive integer n with n > n0."""
    f = floor(consts.n0)
    return max(1, f + 1)


class RademacherEvaluator:
    """Series evaluator for one shape at one working precision."""

    def __init__(
        self,
        shape: FrameShape,
        precision: int = DEFAULT_PRECISION,
        force: bool = False,
        consts: DerivedConstants | None = None,
    ):
        self.shape = shape
        self.precision = precision
        self.force = force
        self.consts = consts if consts is not None else derive_constants(shape)
        self.hypotheses = check_hypotheses(shape)
        self._phases: dict[int, list] = {}
        self._kloosterman: dict[tuple[int, int], object] = {}
        self._terms: dict[tuple[int, int], object] = {}
        self._prefactors: dict[int, object] = {}

    # -- guards ---------------------------------------------------------

    def _require_admissible(self, n) -> int:
        n = index(n)
        if n <= self.consts.n0:
            raise ValueError(
                f"n must exceed the expansion offset {self.consts.n0}, got {n}"
            )
        return n

    def _require_hypotheses(self):
        if not self.hypotheses.satisfied and not self.force:
            raise HypothesesNotSatisfiedError(
                f"shape {self.shape} fails the convergence hypotheses "
                f"(c1={self.consts.c1}, min g={self.hypotheses.min_g}); "
                "pass force=True to compute an unguaranteed value"
            )

    # -- Kloosterman-like sums -------------------------------------------

    def _phase_mpcs(self, k: int):
        cached = self._phases.get(k)
        if cached is None:
            with working(self.precision):
                cached = [
                    (h, mp.expjpi(to_mpf(-2 * c))) for h, c in phase_table(self.shape, k)
                ]
            self._phases[k] = cached
        return cached

    def kloosterman_complex(self, n: int, k: int):
        """A_k(n) as the full complex sum (realness is checked by tests).

        The h-term is exp(-2 pi i (h n/k)) * exp(-2 pi i C_h); the second
        factor is n-independent and cached, the first is generated along the
        coprime residues by multiplying gap powers of exp(-2 pi i n/k).
        """
        key = (k, n % k)
        cached = self._kloosterman.get(key)
        if cached is not None:
            return cached
        phases = self._phase_mpcs(k)
        with working(self.precision):
            if k == 1:
                value = mp.mpc(phases[0][1])
            else:
                wn = mp.expjpi(to_mpf(Fraction(-2 * (n % k), k)))
                gap_pow = {1: wn}
                acc = mp.mpc(0)
                cur = mp.mpc(1)
                prev_h = 0
                for h, u in phases:
                    gap = h - prev_h
                    p = gap_pow.get(gap)
                    if p is None:
                        p = wn**gap
                        gap_pow[gap] = p
                    cur *= p
                    acc += cur * u
                    prev_h = h
                value = acc
        self._kloosterman[key] = value
        return value

    # -- series terms -----------------------------------------------------

    def prefactor(self, n: int):
        """2 pi (1/(24(n-n0)))^((c1+1)/2)."""
        cached = self._prefactors.get(n)
        if cached is None:
            n = self._require_admissible(n)
            c = self.consts
            with working(self.precision):
                base = to_mpf(1 / (24 * (n - c.n0)))
                expo = to_mpf((c.c1 + 1) / 2)
                cached = 2 * mp.pi * mp.power(base, expo)
            self._prefactors[n] = cached
        return cached

    def term(self, n: int, k: int):
        """The k-th summand (without the prefactor); exactly 0 if c3(k) <= 0."""
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        n = self._require_admissible(n)
        key = (n, k)
        cached = self._terms.get(key)
        if cached is not None:
            return cached
        c = self.consts
        c3 = c.c3_at(k)
        with working(self.precision):
            if c3 <= 0:
                value = mp.mpf(0)
            else:
                x = mp.pi / k * mp.sqrt(to_mpf(Fraction(2, 3) * c3 * (n - c.n0)))
                bessel = bessel_i(1 + c.c1, x, self.precision)
                c2 = mp.sqrt(to_mpf(c.c2_squared_at(k)))
                c3_pow = mp.power(to_mpf(c3), to_mpf((c.c1 + 1) / 2))
                a_k = self.kloosterman_complex(n, k).real
                value = c2 * c3_pow * a_k * bessel / k
        self._terms[key] = value
        return value

    def partial_sum(self, n: int, N: int):
        """d(n, N): the prefactor times the ascending sum of terms k <= N."""
        if N < 1:
            raise ValueError(f"N must be >= 1, got {N}")
        n = self._require_admissible(n)
        with working(self.precision):
            acc = mp.mpf(0)
            for k in range(1, N + 1):
                acc += self.term(n, k)
            return self.prefactor(n) * acc

    def term_table(self, n: int, N: int) -> RademacherTermTable:
        if N < 1:
            raise ValueError(f"N must be >= 1, got {N}")
        terms = tuple(self.term(n, k) for k in range(1, N + 1))
        return RademacherTermTable(
            shape=self.shape,
            n=n,
            prefactor=self.prefactor(n),
            terms=terms,
            precision=self.precision,
        )

    def estimate_coefficient(self, n: int, n_cap: int = DEFAULT_N_CAP) -> int:
        """Round the series to an integer adaptively.

        N grows until two consecutive partial sums lie within 0.1 of the
        same integer and the last sits within 0.4 of it; that integer is
        returned.  Raises NotConvergedError past ``n_cap`` terms.
        """
        self._require_hypotheses()
        n = self._require_admissible(n)
        with working(self.precision):
            prefactor = self.prefactor(n)
            acc = mp.mpf(0)
            prev = None
            for N in range(1, n_cap + 1):
                acc += self.term(n, N)
                d = prefactor * acc
                if prev is not None:
                    r = mp.nint(d)
                    if (
                        abs(prev - r) <= ROUND_WINDOW
                        and abs(d - r) <= ROUND_WINDOW
                        and abs(d - r) < ROUND_ACCEPT
                    ):
                        return int(r)
                prev = d
        raise NotConvergedError(n, n_cap)

    def asymptotic_estimate(self, n: int, epsilon: float = 1e-6) -> AsymptoticData:
        """Leading-order estimate from the argmax set of c3(k)/k^2.

        All k in the leading set share the maximal ratio exactly (rational
        comparison); the estimate is the common Bessel factor times the
        front sum of c2(k) k^c1 A_k(n) over the set.  A front sum below
        ``epsilon`` in absolute value flags the result as degenerate (the
        estimate is still returned).
        """
        self._require_hypotheses()
        n = self._require_admissible(n)
        c = self.consts
        ratios = [(c.c3_at(k) / (k * k), k) for k in range(1, c.period + 1)]
        c3_max = max(r for r, _ in ratios)
        if c3_max <= 0:
            raise ValueError(
                f"no modulus with positive series scale for shape {self.shape}"
            )
        leading = tuple(k for r, k in ratios if r == c3_max)
        with working(self.precision):
            front = mp.mpf(0)
            for k in leading:
                c2 = mp.sqrt(to_mpf(c.c2_squared_at(k)))
                front += c2 * mp.power(k, to_mpf(c.c1)) * self.kloosterman_complex(n, k).real
            x = mp.pi * mp.sqrt(to_mpf(Fraction(2, 3) * c3_max * (n - c.n0)))
            bessel = bessel_i(1 + c.c1, x, self.precision)
            base = to_mpf(c3_max / (24 * (n - c.n0)))
            estimate = 2 * mp.pi * mp.power(base, to_mpf((c.c1 + 1) / 2)) * bessel * front
            degenerate = bool(abs(front) < epsilon)
        return AsymptoticData(
            leading_set=leading,
            c3_max=c3_max,
            estimate=estimate,
            front_sum=front,
            degenerate=degenerate,
        )


# -- functional wrappers ------------------------------------------------


def rademacher_term(
    shape: FrameShape,
    n: int,
    k: int,
    precision: int = DEFAULT_PRECISION,
    consts: DerivedConstants | None = None,
):
    """One series summand (without the prefactor); 0 where c3(k) <= 0."""
    return RademacherEvaluator(shape, precision, consts=consts).term(n, k)


def partial_sum(shape: FrameShape, n: int, N: int, precision: int = DEFAULT_PRECISION):
    """The N-th partial sum d(n, N)."""
    return RademacherEvaluator(shape, precision).partial_sum(n, N)


def term_table(
    shape: FrameShape, n: int, N: int, precision: int = DEFAULT_PRECISION
) -> RademacherTermTable:
    """All terms k <= N for one (shape, n), for convergence reporting."""
    return RademacherEvaluator(shape, precision).term_table(n, N)


def estimate_coefficient(
    shape: FrameShape,
    n: int,
    precision: int = DEFAULT_PRECISION,
    n_cap: int = DEFAULT_N_CAP,
    force: bool = False,
) -> int:
    """The exact integer coefficient, via adaptive rounding of the series."""
    return RademacherEvaluator(shape, precision, force=force).estimate_coefficient(
        n, n_cap
    )


def asymptotic_estimate(
    shape: FrameShape,
    n: int,
    precision: int = DEFAULT_PRECISION,
    epsilon: float = 1e-6,
    force: bool = False,
) -> AsymptoticData:
    """Leading-order growth estimate of the coefficient at index n."""
    return RademacherEvaluator(shape, precision, force=force).asymptotic_estimate(
        n, epsilon
    )
