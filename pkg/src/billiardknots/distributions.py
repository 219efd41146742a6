"""Exact knot and crossing-number distributions, with asymptotic diagnostics.

Probabilities are exact rationals with denominator 2**n, where n is the
number of crossings in the random diagram.  Valid lengths are n congruent
to 0 or 1 mod 3 (so that the table width n+1 is coprime to 3 and the
trajectory closes to a knot).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import binomial, count_full
from .words import UNKNOT_CLASS, KnotClass

#: per-crossing decay rate of any fixed knot's probability
ALPHA = (27 / 32) ** (1 / 3)
LOG2_ALPHA = math.log2(27 / 32) / 3

#: limiting ratio crossing_number / word_length, (sqrt(5) - 1) / 4
BETA = (math.sqrt(5) - 1) / 4

#: critical point of the exponent function phi
X0 = BETA
Y0 = (math.sqrt(5) - 2) / 2


def check_length(n: int) -> int:
    """Reject lengths with n == 2 mod 3 (table width not coprime to 3)."""
    if n < 0 or n % 3 == 2:
        raise ValueError(f"invalid length {n}: need n >= 0 with n = 0 or 1 mod 3")
    return n


@dataclass(frozen=True)
class ExactProb:
    """A probability numerator / 2**exponent, kept unreduced."""

    numerator: int
    exponent: int

    def __post_init__(self):
        if self.numerator < 0 or self.exponent < 0:
            raise ValueError("numerator and exponent must be nonnegative")
        if self.numerator > (1 << self.exponent):
            raise ValueError("probability above 1")

    @property
    def denominator(self) -> int:
        return 1 << self.exponent

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __float__(self) -> float:
        return float(self.fraction)

    def __str__(self) -> str:
        return f"{self.numerator}/{1 << self.exponent}"


def knot_probability(knot: KnotClass, n: int) -> ExactProb:
    """Probability that a random n-crossing diagram yields this knot.

    Picks the reduced length matching n mod 3 and counts the words that
    reduce into the class: multiplicity times the full insertion count.
    The unknot uses its own count through the empty word, rescaled to the
    common denominator 2**n.
    """
    check_length(n)
    if knot.is_unknot:
        m = n // 3
        return ExactProb(count_full(m, 0) << (n - 3 * m), n)
    ell = knot.ell0 if n % 3 == 0 else knot.ell1
    if n < ell:
        return ExactProb(0, n)
    return ExactProb(knot.multiplicity_r * count_full((n - ell) // 3, ell), n)


@dataclass
class CrossingPmf:
    """Exact crossing-number distribution of a random n-crossing diagram."""

    n: int
    unknot_mass: ExactProb
    masses: dict[int, ExactProb]  # crossing number c in {3..n} -> mass

    def total(self) -> Fraction:
        return self.unknot_mass.fraction + sum(
            (p.fraction for p in self.masses.values()), Fraction(0)
        )

    def as_float_dict(self) -> dict[int, float]:
        """Float view keyed by crossing number, with the unknot at 0."""
        out = {0: float(self.unknot_mass)}
        out.update((c, float(p)) for c, p in self.masses.items())
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "unknot": str(self.unknot_mass),
            "pmf": {str(c): str(self.masses[c]) for c in sorted(self.masses)},
        }

    def to_csv_rows(self) -> list[tuple]:
        rows = [(0, self.unknot_mass.numerator, self.unknot_mass.denominator,
                 float(self.unknot_mass))]
        for c in sorted(self.masses):
            p = self.masses[c]
            rows.append((c, p.numerator, p.denominator, float(p)))
        return rows


def crossing_pmf(n: int) -> CrossingPmf:
    """Exact distribution of the crossing number at length n.

    For each c, reduced words with c runs and k two-letter runs have length
    c + k; summing the word counts over admissible k (k <= c - 2 and
    c + k = n mod 3) and halving the 2**n total for the two starting bits
    gives the mass.  The masses plus the unknot mass sum to exactly 1.
    """
    check_length(n)
    if n < 1:
        raise ValueError("n must be at least 1")
    masses = {}
    for c in range(3, n + 1):
        acc = 0
        k = (n - c) % 3
        while k <= c - 2 and n - c - k >= 0:
            acc += binomial(c - 2, k) * count_full((n - c - k) // 3, c + k)
            k += 3
        masses[c] = ExactProb(2 * acc, n)
    return CrossingPmf(n, knot_probability(UNKNOT_CLASS, n), masses)


def _log2_int(x: int) -> float:
    """Base-2 log of a positive integer of any size (top 53 bits kept)."""
    if x <= 0:
        raise ValueError("x must be positive")
    shift = x.bit_length() - 53
    if shift <= 0:
        return math.log2(x)
    return math.log2(x >> shift) + shift


@dataclass(frozen=True)
class AsymptoticReport:
    n: int
    log2_rate: float
    target: float
    gap: float


def alpha_rate(knot: KnotClass, n: int) -> AsymptoticReport:
    """Per-crossing log-probability of the knot at length n, against log2(alpha)."""
    p = knot_probability(knot, n)
    if p.numerator == 0:
        raise ValueError(f"probability of {knot.canonical!r} at n={n} is 0")
    rate = (_log2_int(p.numerator) - p.exponent) / n
    return AsymptoticReport(n, rate, LOG2_ALPHA, abs(rate - LOG2_ALPHA))


@dataclass(frozen=True)
class BetaSummary:
    """Mode and concentration of the crossing-number pmf at length n."""

    n: int
    mode: int
    mode_ratio: float
    target: float
    gap: float
    delta: float
    tail_mass: Fraction


def beta_summary(n: int, delta: float = 0.05) -> BetaSummary:
    """Locate the pmf mode and the exact mass outside the beta +- delta band.

    The unknot (crossing number 0) counts toward the tail.  Ties on the
    mode go to the smallest crossing number.
    """
    pmf = crossing_pmf(n)
    mode = None
    best = Fraction(-1)
    tail = Fraction(0)
    if abs(0.0 - BETA) > delta:
        tail += pmf.unknot_mass.fraction
    for c in sorted(pmf.masses):
        frac = pmf.masses[c].fraction
        if frac > best:
            best, mode = frac, c
        if abs(c / n - BETA) > delta:
            tail += frac
    return BetaSummary(n, mode, mode / n, BETA, abs(mode / n - BETA), delta, tail)


def entropy(p: float) -> float:
    """Binary entropy -p*log2(p) - (1-p)*log2(1-p), 0 at the endpoints."""
    if p < 0 or p > 1:
        raise ValueError(f"entropy argument {p} outside [0, 1]")
    if p == 0 or p == 1:
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def _check_phi_domain(x: float, y: float) -> None:
    if not (0 < y < x and x + y < 1):
        raise ValueError(f"(x, y) = ({x}, {y}) outside 0 < y < x, x + y < 1")


def phi(x: float, y: float) -> float:
    """Exponential growth rate of the dominant pmf term at c = x*n, k = y*n.

    phi(x, y) = H(y/x)*x + H((1-x-y)/3) - 1 with binary entropy H; it is 0
    at (X0, Y0) and strictly negative elsewhere on the domain, which is why
    the crossing ratio concentrates at BETA.
    """
    _check_phi_domain(x, y)
    return entropy(y / x) * x + entropy((1 - x - y) / 3) - 1


def phi_gradient(x: float, y: float) -> tuple[float, float]:
    """Closed-form gradient of phi; vanishes exactly at (X0, Y0)."""
    _check_phi_domain(x, y)
    shared = (math.log2(1 - x - y) - math.log2(2 + x + y)) / 3
    return (
        shared - math.log2(1 - y / x),
        shared + math.log2(x / y - 1),
    )
