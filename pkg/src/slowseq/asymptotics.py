"""Characteristic polynomial, dominant root, and density of the slow sequence.

For p(x) = x^k - sum lam_i x^{k-i} there is a unique real root kappa > 1,
also the unique root of largest modulus, and the slow sequence has density
1 - 1/kappa.  Since p(1) = 1 - Lam < 0 <= p(Lam), bisection on [1, Lam]
finds kappa without any general polynomial machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .recurrence import LinearRecurrence, SequenceCache
from .zeckendorf import slow_value_at

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class CharPoly:
    """x^k - lam_1 x^{k-1} - ... - lam_k, stored highest degree first."""

    recurrence: LinearRecurrence
    coefficients: tuple[int, ...]

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in self.coefficients:
            acc = acc * x + c
        return acc


def char_poly(rec: LinearRecurrence) -> CharPoly:
    return CharPoly(
        recurrence=rec, coefficients=(1,) + tuple(-c for c in rec.coeffs)
    )


def dominant_root(rec: LinearRecurrence, tol: float = DEFAULT_TOL) -> float:
    """The unique real root in (1, Lam], by bisection to bracket width tol."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    p = char_poly(rec)
    lo, hi = 1.0, float(rec.total)
    assert p(lo) < 0 <= p(hi)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid in (lo, hi):  # float resolution reached
            break
        if p(mid) < 0:
            lo = mid
        else:
            hi = mid
    return hi if p(hi) == 0 else (lo + hi) / 2


def limit_ratio(rec: LinearRecurrence, tol: float = DEFAULT_TOL) -> float:
    """The limiting density 1 - 1/kappa of the slow sequence."""
    return 1.0 - 1.0 / dominant_root(rec, tol)


def empirical_ratio(rec: LinearRecurrence, s: int, n: int) -> Fraction:
    """L(n) / n, computed through cumulative frequency counts."""
    return Fraction(slow_value_at(rec, s, n), n)


def growth_constant_estimate(rec: LinearRecurrence, n: int) -> float:
    """a_n / kappa^n: an empirical estimate of the growth constant.

    The constant has no closed form here; treat the result as an estimate
    converging as n grows.
    """
    if n < rec.order:
        raise ValueError(f"need n >= {rec.order}, got {n}")
    kappa = dominant_root(rec)
    a_n = SequenceCache(rec).term(n)
    if n * math.log(kappa) < 700.0:
        return a_n / kappa**n
    return math.exp(math.log(a_n) - n * math.log(kappa))
