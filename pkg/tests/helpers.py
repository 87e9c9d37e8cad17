"""Shared test utilities.

brute_force_count is fully independent of the package (plain nested
enumeration), so its agreement with the dynamic-programming oracle is
evidence rather than circularity.  The series helpers reuse the package's
exact arithmetic primitives but follow different algorithms than the code
under test (summing powers instead of the derivative recursion, caller-given
factor order instead of the sorted one).
"""

from fractions import Fraction
from itertools import combinations
from math import factorial, gcd, prod
from typing import Iterable, List, Sequence, Tuple

from denumerant.series import Poly, TruncatedSeries, series_inv, series_mul


def brute_force_count(parts: Sequence[int], n: int) -> int:
    """Count representations by direct nested enumeration."""
    if n < 0:
        return 0
    ordered = sorted(parts, reverse=True)
    if not ordered:
        return 1 if n == 0 else 0

    def go(remaining: int, idx: int) -> int:
        a = ordered[idx]
        if idx == len(ordered) - 1:
            return 1 if remaining % a == 0 else 0
        return sum(go(remaining - m * a, idx + 1) for m in range(remaining // a + 1))

    return go(n, 0)


def pairwise_coprime(values: Iterable[int]) -> bool:
    return all(gcd(a, b) == 1 for a, b in combinations(tuple(values), 2))


def coprime_part_tuples(
    max_part: int, k_values: Iterable[int], max_product: int = None
) -> List[Tuple[int, ...]]:
    """All increasing pairwise-coprime k-tuples from [1, max_part]."""
    out = []
    for k in k_values:
        for combo in combinations(range(1, max_part + 1), k):
            if max_product is not None and prod(combo) > max_product:
                continue
            if pairwise_coprime(combo):
                out.append(combo)
    return out


def exp_by_powers(h: TruncatedSeries) -> TruncatedSeries:
    """e^h by summing h^m / m! directly (h must have zero constant term).

    Since h starts at s^1, the power h^m contributes nothing below s^m, so
    summing m = 0..order is exact at the truncation order.  This is the slow
    reference the fast recursion is checked against.
    """
    order = h.order
    total = list(TruncatedSeries.one(order).coeffs)
    power = TruncatedSeries.one(order)
    for m in range(1, order + 1):
        power = series_mul(power, h)
        scale = Fraction(1, factorial(m))
        for i in range(order + 1):
            total[i] = total[i] + scale * power.coeffs[i]
    return TruncatedSeries(tuple(total))


def bb_polys_by_factor_order(
    parts_in_order: Sequence[int], max_index: int
) -> List[Poly]:
    """Bernoulli-Barnes polynomials with the factors multiplied as given.

    A from-scratch expansion of s^k e^{xs} / prod(e^{a s} - 1) that honors
    the caller's factor order, used to show the packaged computation does
    not depend on part ordering.
    """
    order = max_index
    acc = TruncatedSeries.one(order)
    for a in parts_in_order:
        factor = TruncatedSeries(
            tuple(Fraction(a ** m, factorial(m + 1)) for m in range(order + 1))
        )
        acc = series_mul(acc, series_inv(factor))
    scale = Fraction(1, prod(parts_in_order))
    scaled = TruncatedSeries(tuple(c * scale for c in acc.coeffs))
    exp_x = TruncatedSeries(
        tuple(Poly.monomial(j, Fraction(1, factorial(j))) for j in range(order + 1))
    )
    expanded = series_mul(scaled, exp_x)
    out = []
    for i in range(max_index + 1):
        coeff = expanded.coeffs[i]
        poly = coeff if isinstance(coeff, Poly) else Poly.constant(coeff)
        out.append(poly * factorial(i))
    return out
