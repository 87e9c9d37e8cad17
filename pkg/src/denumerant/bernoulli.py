"""Bernoulli numbers and Bernoulli-Barnes polynomials, all exact.

Sign convention used throughout this package: B_1 = +1/2, i.e. the
generating function is read as

    s / (e^s - 1) = 1 - B_1 s + sum_{i >= 2} B_i s^i / i!

with the minus sign kept in front of the linear term.  The more common
convention puts B_1 = -1/2; every other entry agrees (odd indices from 3 on
vanish, B_2 = 1/6, B_4 = -1/30).  Tables from elsewhere must flip index 1
before being compared with these.

The Bernoulli-Barnes polynomial B_i(x; a_1..a_k) generalizes the ordinary
Bernoulli polynomial to a set of moduli: it is the degree-i polynomial in x
defined by

    s^k e^{xs} / prod_j (e^{a_j s} - 1) = sum_i B_i(x; a) s^i / i!

expanded around s = 0.  With k = 1 and a_1 = 1 this recovers the classical
Bernoulli polynomials (in the same B_1 = +1/2 reading).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, List, Tuple

from .errors import DomainError
from .partset import PartSet
from .series import Poly, TruncatedSeries, poly_eval, series_inv, series_mul


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli numbers B_0..B_m under the B_1 = +1/2 convention."""

    values: Tuple[Fraction, ...]

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)


# Grows monotonically; entries never change once computed.
_KNOWN: List[Fraction] = [Fraction(1)]


def _grow(m: int) -> None:
    if m < len(_KNOWN):
        return
    # s/(e^s - 1) is the inverse of (e^s - 1)/s = sum_j s^j / (j+1)!
    denominator = TruncatedSeries(
        tuple(Fraction(1, factorial(j + 1)) for j in range(m + 1))
    )
    inverted = series_inv(denominator)
    fresh = [Fraction(1)]
    if m >= 1:
        fresh.append(-inverted.coeffs[1])
    for i in range(2, m + 1):
        fresh.append(inverted.coeffs[i] * factorial(i))
    _KNOWN[:] = fresh


def bernoulli_numbers(m: int) -> BernoulliTable:
    """The table B_0..B_m (see the module docstring for the convention)."""
    if m < 0:
        raise DomainError("table size must be nonnegative")
    _grow(m)
    return BernoulliTable(tuple(_KNOWN[: m + 1]))


def log_coefficients(m: int) -> Tuple[Fraction, ...]:
    """Coefficients of s^1..s^m in ln(s/(e^s - 1)), i.e. -B_i/(i! * i)."""
    if m < 1:
        raise DomainError("need at least one coefficient")
    table = bernoulli_numbers(m)
    return tuple(-table[i] / (factorial(i) * i) for i in range(1, m + 1))


def power_sum(parts: PartSet, m: int) -> int:
    """Sum of the m-th powers of the parts; m = 0 counts the parts."""
    if m < 0:
        raise DomainError("power sum index must be nonnegative")
    return sum(a ** m for a in parts)


@dataclass(frozen=True)
class BBPoly:
    """One Bernoulli-Barnes polynomial B_index(x; parts)."""

    index: int
    parts: PartSet
    poly: Poly

    def at(self, x) -> Fraction:
        return poly_eval(self.poly, x)


def bernoulli_barnes(parts: PartSet, max_index: int) -> Tuple[BBPoly, ...]:
    """B_0..B_max_index for the given parts, as polynomials in x.

    Rewrites the generating function as

        e^{xs} * prod_j [ a_j s / (e^{a_j s} - 1) ] / prod_j a_j

    so each factor is the inverse of (e^{a_j s} - 1)/(a_j s), a series with
    rational coefficients, and only the final e^{xs} factor carries x (its
    s^j coefficient is the monomial x^j/j!).  B_i is i! times the s^i
    coefficient of the product.  Results are cached per (parts, max_index).
    """
    if max_index < 0:
        raise DomainError("polynomial index must be nonnegative")
    return _bernoulli_barnes(parts, max_index)


@lru_cache(maxsize=None)
def _bernoulli_barnes(parts: PartSet, max_index: int) -> Tuple[BBPoly, ...]:
    order = max_index
    rational_part = TruncatedSeries.one(order)
    for a in parts:
        factor = TruncatedSeries(
            tuple(Fraction(a ** m, factorial(m + 1)) for m in range(order + 1))
        )
        rational_part = series_mul(rational_part, series_inv(factor))
    scale = Fraction(1, parts.product)
    scaled = TruncatedSeries(tuple(c * scale for c in rational_part.coeffs))
    exp_x = TruncatedSeries(
        tuple(Poly.monomial(j, Fraction(1, factorial(j))) for j in range(order + 1))
    )
    expanded = series_mul(scaled, exp_x)
    out = []
    for i in range(max_index + 1):
        coeff = expanded.coeffs[i]
        poly = coeff if isinstance(coeff, Poly) else Poly.constant(coeff)
        out.append(BBPoly(index=i, parts=parts, poly=poly * factorial(i)))
    return tuple(out)
