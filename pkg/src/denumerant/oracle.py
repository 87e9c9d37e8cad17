"""Ground truth for restricted counts, by dynamic programming.

counts[n] is the number of ways to write n as a nonnegative integer
combination of the parts.  The table is filled one part at a time: adding a
part a replaces each residue chain counts[c], counts[c+a], counts[c+2a], ...
with its running sum, which is the standard unbounded-knapsack recurrence
counts[n] += counts[n - a] expressed as a prefix sum.  Everything is exact
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Dict, Sequence, Tuple

from .errors import DomainError
from .partset import PartSet


@dataclass(frozen=True)
class CountTable:
    """Counts for 0 <= n <= upper against a fixed part set."""

    parts: PartSet
    upper: int
    counts: Tuple[int, ...]


def _dp_counts(parts: Sequence[int], upper: int) -> Tuple[int, ...]:
    counts = [0] * (upper + 1)
    counts[0] = 1
    for a in parts:
        if a <= upper:
            for start in range(a):
                counts[start::a] = accumulate(counts[start::a])
    return tuple(counts)


# Recently used tables, keyed by the parts tuple.  Tables grow geometrically
# so a sweep over n for one part set costs one DP pass, and the set count is
# bounded so verification sweeps over many part sets do not hoard memory.
_TABLES: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
_MAX_CACHED_SETS = 64


def _counts_up_to(parts: PartSet, upper: int) -> Tuple[int, ...]:
    key = parts.parts
    held = _TABLES.pop(key, None)
    if held is not None and len(held) > upper:
        _TABLES[key] = held
        return held
    target = max(upper + 1, 2 * len(held) if held is not None else 0)
    fresh = _dp_counts(key, target - 1)
    _TABLES[key] = fresh
    while len(_TABLES) > _MAX_CACHED_SETS:
        _TABLES.pop(next(iter(_TABLES)))
    return fresh


def oracle_table(parts: PartSet, upper: int) -> CountTable:
    """The full table of counts for 0 <= n <= upper."""
    if upper < 0:
        raise DomainError("table upper bound must be nonnegative")
    counts = _counts_up_to(parts, upper)
    return CountTable(parts=parts, upper=upper, counts=counts[: upper + 1])


def oracle_count(parts: PartSet, n: int) -> int:
    """The count for a single n."""
    if n < 0:
        raise DomainError("counts are defined for nonnegative n only")
    return _counts_up_to(parts, n)[n]


def multiset_counts(parts: Sequence[int], upper: int) -> Tuple[int, ...]:
    """DP table for a raw sequence of parts, repeats honored as repeats.

    PartSet refuses duplicates by design; this entry point exists so the
    recurrence can be exercised on multisets as well.  An empty sequence is
    allowed and yields the table (1, 0, 0, ...).
    """
    if upper < 0:
        raise DomainError("table upper bound must be nonnegative")
    for a in parts:
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise DomainError(f"parts must be positive integers, got {a!r}")
    return _dp_counts(tuple(parts), upper)
