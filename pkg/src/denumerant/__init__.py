"""Exact restricted-count computations via reduction identities.

The package computes p(n), the number of ways to write n as a nonnegative
integer combination of a fixed set of parts, four independent ways: a
dynamic-programming oracle, a correction-sum reduction, an exponential
series recursion, and hard-coded closed forms for 2 to 5 parts.  Everything
is exact rational arithmetic; the test suite's job is to show the four
routes never disagree.
"""

from .bernoulli import (
    BBPoly,
    BernoulliTable,
    bernoulli_barnes,
    bernoulli_numbers,
    log_coefficients,
    power_sum,
)
from .errors import (
    CoprimalityError,
    DomainError,
    InternalInconsistencyError,
    NonInvertibleError,
    OrderMismatchError,
    RangeError,
    SamplingExhaustedError,
    UnsupportedArityError,
)
from .oracle import CountTable, multiset_counts, oracle_count, oracle_table
from .partset import PartSet
from .reductions import (
    ReductionInput,
    TheoremReport,
    closed_form_correction,
    closed_form_theorem2,
    decompose,
    section3_count,
    theorem1_correction,
    theorem1_count,
    theorem2_count,
    theorem3_rhs,
)
from .series import (
    Poly,
    Rational,
    TruncatedSeries,
    poly_eval,
    series_exp,
    series_inv,
    series_mul,
)

__version__ = "0.1.0"

__all__ = [
    "BBPoly",
    "BernoulliTable",
    "CoprimalityError",
    "CountTable",
    "DomainError",
    "InternalInconsistencyError",
    "NonInvertibleError",
    "OrderMismatchError",
    "PartSet",
    "Poly",
    "RangeError",
    "Rational",
    "ReductionInput",
    "SamplingExhaustedError",
    "TheoremReport",
    "TruncatedSeries",
    "UnsupportedArityError",
    "bernoulli_barnes",
    "bernoulli_numbers",
    "closed_form_correction",
    "closed_form_theorem2",
    "decompose",
    "log_coefficients",
    "multiset_counts",
    "oracle_count",
    "oracle_table",
    "poly_eval",
    "power_sum",
    "section3_count",
    "series_exp",
    "series_inv",
    "series_mul",
    "theorem1_correction",
    "theorem1_count",
    "theorem2_count",
    "theorem3_rhs",
]
