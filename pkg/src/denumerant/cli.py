"""Command-line front end.

Subcommands:

  count     p(n) for a part set, by any of four methods
  bb        Bernoulli-Barnes polynomials as coefficient lists
  bernoulli Bernoulli numbers (B_1 = +1/2 convention)
  theorem2  p(product - x) via the boundary identity, 1 <= x <= sum - 1
  theorem3  the two-sided boundary value for sum <= x <= product
  verify    seeded random cross-checks of every identity against the oracle

Exit codes: 0 success, 1 verification failures, 2 usage error, 3 domain
error (bad part set, out-of-range argument, and similar).

With --output json, every potentially large numeric value is emitted as a
decimal string so consumers that parse JSON numbers as floats cannot corrupt
it.  Output on stdout is byte-identical for identical argv and seed; wall
time goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .bernoulli import bernoulli_barnes, bernoulli_numbers
from .errors import DomainError, InternalInconsistencyError, SamplingExhaustedError
from .oracle import oracle_count
from .partset import PartSet
from .reductions import (
    TheoremReport,
    closed_form_correction,
    closed_form_theorem2,
    decompose,
    section3_count,
    theorem1_count,
    theorem2_count,
    theorem3_rhs,
)

_METHODS = ("oracle", "theorem1", "section3", "closed-form")


@dataclass(frozen=True)
class CliConfig:
    """Parsed arguments for one invocation."""

    subcommand: str
    output: str = "text"
    parts: Optional[Tuple[int, ...]] = None
    n: Optional[int] = None
    x: Optional[int] = None
    method: str = "oracle"
    max_index: Optional[int] = None
    trials: int = 500
    seed: int = 0
    k_min: int = 2
    k_max: int = 5
    max_part: int = 13
    max_product: int = 100000


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one verification sweep."""

    trials: int
    failures: Tuple[TheoremReport, ...]
    seed: int
    elapsed: float


def random_coprime_partset(
    k: int,
    max_part: int,
    rng: random.Random,
    max_attempts: int = 1000,
) -> PartSet:
    """Draw a pairwise-coprime set of k distinct parts from [1, max_part].

    Plain rejection sampling: draw k distinct values, accept iff pairwise
    coprime.  Deterministic given the rng state.
    """
    if k < 1:
        raise DomainError(f"need at least one part, got k={k}")
    if max_part < k:
        raise DomainError(f"cannot draw {k} distinct parts from [1, {max_part}]")
    population = range(1, max_part + 1)
    for _ in range(max_attempts):
        candidate = PartSet(tuple(rng.sample(population, k)))
        if candidate.pairwise_coprime:
            return candidate
    raise SamplingExhaustedError(
        f"no pairwise-coprime {k}-subset of [1, {max_part}] in {max_attempts} draws"
    )


def _sample_bounded_parts(
    rng: random.Random, k: int, max_part: int, max_product: int
) -> PartSet:
    for _ in range(1000):
        candidate = random_coprime_partset(k, max_part, rng)
        if candidate.product <= max_product:
            return candidate
    raise SamplingExhaustedError(
        f"no pairwise-coprime {k}-subset of [1, {max_part}]"
        f" with product <= {max_product}"
    )


def _check_trial(
    trial: int, parts: PartSet, n: int, q: int, r: int, rng: random.Random
) -> List[TheoremReport]:
    """All identity checks for one sampled instance, oracle on the left."""
    k = parts.k
    product = parts.product
    reports = []
    base_inputs = (("trial", trial), ("n", n), ("q", q), ("r", r))

    expected = oracle_count(parts, n)
    reports.append(
        TheoremReport(
            check="theorem1",
            parts=parts,
            inputs=base_inputs,
            lhs=expected,
            rhs=Fraction(theorem1_count(parts, n)),
        )
    )
    if k >= 2:
        reports.append(
            TheoremReport(
                check="section3",
                parts=parts,
                inputs=base_inputs,
                lhs=expected,
                rhs=Fraction(section3_count(parts, n)),
            )
        )
    if 2 <= k <= 5:
        true_correction = expected - oracle_count(parts, r)
        reports.append(
            TheoremReport(
                check="closed-form",
                parts=parts,
                inputs=base_inputs,
                lhs=true_correction,
                rhs=closed_form_correction(parts, n),
            )
        )
    if k >= 2:
        x = rng.randint(1, parts.total - 1)
        boundary = oracle_count(parts, product - x)
        x_inputs = (("trial", trial), ("x", x))
        reports.append(
            TheoremReport(
                check="theorem2",
                parts=parts,
                inputs=x_inputs,
                lhs=boundary,
                rhs=Fraction(theorem2_count(parts, x)),
            )
        )
        if k <= 5:
            reports.append(
                TheoremReport(
                    check="closed-form-theorem2",
                    parts=parts,
                    inputs=x_inputs,
                    lhs=boundary,
                    rhs=closed_form_theorem2(parts, x),
                )
            )
        if parts.total <= product:
            x3 = rng.randint(parts.total, product)
            two_sided = oracle_count(parts, product - x3) + (-1) ** k * oracle_count(
                parts, x3 - parts.total
            )
            reports.append(
                TheoremReport(
                    check="theorem3",
                    parts=parts,
                    inputs=(("trial", trial), ("x", x3)),
                    lhs=two_sided,
                    rhs=theorem3_rhs(parts, x3),
                )
            )
    return reports


def run_verify(
    trials: int,
    seed: int,
    k_min: int,
    k_max: int,
    max_part: int,
    max_product: int,
) -> VerifyReport:
    """Seeded random sweep of every identity against the oracle.

    Each trial draws a part set by rejection sampling (product capped so the
    oracle table stays small), then n = q * product + r with q in 0..3 and r
    uniform, then checks every identity applicable to the arity.  Failures
    come back in trial order.
    """
    if trials < 0:
        raise DomainError(f"trials must be nonnegative, got {trials}")
    if not 1 <= k_min <= k_max:
        raise DomainError(f"need 1 <= k-min <= k-max, got {k_min}..{k_max}")
    started = time.perf_counter()
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        k = rng.randint(k_min, k_max)
        parts = _sample_bounded_parts(rng, k, max_part, max_product)
        q = rng.randint(0, 3)
        r = rng.randrange(parts.product)
        n = q * parts.product + r
        for report in _check_trial(trial, parts, n, q, r, rng):
            if not report.holds:
                failures.append(report)
    elapsed = time.perf_counter() - started
    return VerifyReport(
        trials=trials, failures=tuple(failures), seed=seed, elapsed=elapsed
    )


def _parse_parts(text: str) -> Tuple[int, ...]:
    pieces = [piece.strip() for piece in text.split(",")]
    if not pieces or any(not piece for piece in pieces):
        raise argparse.ArgumentTypeError(
            "parts must be comma-separated positive integers, e.g. 2,3,5"
        )
    try:
        values = tuple(int(piece) for piece in pieces)
    except ValueError:
        raise argparse.ArgumentTypeError(f"parts must be integers, got {text!r}")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("parts must be positive")
    return values


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = _nonnegative_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="denumerant",
        description="exact restricted-count computations and identity checks",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def with_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", choices=("text", "json"), default="text")

    count = sub.add_parser("count", help="count representations of n")
    count.add_argument("--parts", type=_parse_parts, required=True)
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--method", choices=_METHODS, default="oracle")
    with_output(count)

    bb = sub.add_parser("bb", help="Bernoulli-Barnes polynomials")
    bb.add_argument("--parts", type=_parse_parts, required=True)
    bb.add_argument("--max-index", type=_nonnegative_int, required=True)
    with_output(bb)

    bernoulli = sub.add_parser("bernoulli", help="Bernoulli numbers")
    bernoulli.add_argument("--max-index", type=_nonnegative_int, required=True)
    with_output(bernoulli)

    theorem2 = sub.add_parser("theorem2", help="count at product - x, small x")
    theorem2.add_argument("--parts", type=_parse_parts, required=True)
    theorem2.add_argument("--x", type=int, required=True)
    with_output(theorem2)

    theorem3 = sub.add_parser("theorem3", help="two-sided boundary value at x")
    theorem3.add_argument("--parts", type=_parse_parts, required=True)
    theorem3.add_argument("--x", type=int, required=True)
    with_output(theorem3)

    verify = sub.add_parser("verify", help="seeded random identity checks")
    verify.add_argument("--trials", type=_nonnegative_int, default=500)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--k-min", type=_positive_int, default=2)
    verify.add_argument("--k-max", type=_positive_int, default=5)
    verify.add_argument("--max-part", type=_positive_int, default=13)
    verify.add_argument("--max-product", type=_positive_int, default=100000)
    with_output(verify)

    return parser


def _config_from(namespace: argparse.Namespace) -> CliConfig:
    def pick(name: str, fallback):
        return getattr(namespace, name, fallback)

    return CliConfig(
        subcommand=namespace.subcommand,
        output=pick("output", "text"),
        parts=pick("parts", None),
        n=pick("n", None),
        x=pick("x", None),
        method=pick("method", "oracle"),
        max_index=pick("max_index", None),
        trials=pick("trials", 500),
        seed=pick("seed", 0),
        k_min=pick("k_min", 2),
        k_max=pick("k_max", 5),
        max_part=pick("max_part", 13),
        max_product=pick("max_product", 100000),
    )


def _count_value(parts: PartSet, n: int, method: str) -> int:
    if method == "oracle":
        return oracle_count(parts, n)
    if method == "theorem1":
        return theorem1_count(parts, n)
    if method == "section3":
        return section3_count(parts, n)
    reduction = decompose(parts, n)
    correction = closed_form_correction(parts, n)
    if correction.denominator != 1:
        raise InternalInconsistencyError(
            f"closed-form correction is not an integer: {correction}"
        )
    return oracle_count(parts, reduction.r) + correction.numerator


def _emit_value(config: CliConfig, parts: Optional[PartSet], given, value) -> None:
    """Print one computed value; `value` is a string or a list of strings."""
    if config.output == "text":
        if isinstance(value, str):
            print(value)
        else:
            for line in value:
                print(line)
        return
    payload = {
        "subcommand": config.subcommand,
        "parts": list(parts.parts) if parts is not None else [],
        "input": str(given),
        "method": config.method if config.subcommand == "count" else None,
        "value": value,
    }
    print(json.dumps(payload))


def _emit_verify(config: CliConfig, report: VerifyReport) -> None:
    if config.output == "text":
        print(f"trials: {report.trials}")
        print(f"seed: {report.seed}")
        print(f"failures: {len(report.failures)}")
        for failure in report.failures:
            rendered = " ".join(f"{name}={val}" for name, val in failure.inputs)
            print(
                f"FAIL {failure.check} parts={list(failure.parts.parts)}"
                f" {rendered} lhs={failure.lhs} rhs={failure.rhs}"
            )
    else:
        payload = {
            "trials": report.trials,
            "failures": [
                {
                    "check": failure.check,
                    "parts": list(failure.parts.parts),
                    "inputs": {name: str(val) for name, val in failure.inputs},
                    "lhs": str(failure.lhs),
                    "rhs": str(failure.rhs),
                }
                for failure in report.failures
            ],
            "seed": report.seed,
        }
        print(json.dumps(payload))
    print(f"elapsed: {report.elapsed:.3f}s", file=sys.stderr)


def _dispatch(config: CliConfig) -> int:
    if config.subcommand == "count":
        parts = PartSet(config.parts)
        value = _count_value(parts, config.n, config.method)
        _emit_value(config, parts, config.n, str(value))
        return 0
    if config.subcommand == "theorem2":
        parts = PartSet(config.parts)
        value = theorem2_count(parts, config.x)
        _emit_value(config, parts, config.x, str(value))
        return 0
    if config.subcommand == "theorem3":
        parts = PartSet(config.parts)
        rhs = theorem3_rhs(parts, config.x)
        _emit_value(config, parts, config.x, str(rhs))
        return 0
    if config.subcommand == "bb":
        parts = PartSet(config.parts)
        polys = bernoulli_barnes(parts, config.max_index)
        if config.output == "text":
            lines = [
                "B_{} = [{}]".format(
                    entry.index, ", ".join(str(c) for c in entry.poly.coeffs)
                )
                for entry in polys
            ]
            _emit_value(config, parts, config.max_index, lines)
        else:
            value = [[str(c) for c in entry.poly.coeffs] for entry in polys]
            _emit_value(config, parts, config.max_index, value)
        return 0
    if config.subcommand == "bernoulli":
        table = bernoulli_numbers(config.max_index)
        if config.output == "text":
            lines = [f"B_{i} = {v}" for i, v in enumerate(table)]
            _emit_value(config, None, config.max_index, lines)
        else:
            _emit_value(config, None, config.max_index, [str(v) for v in table])
        return 0
    report = run_verify(
        trials=config.trials,
        seed=config.seed,
        k_min=config.k_min,
        k_max=config.k_max,
        max_part=config.max_part,
        max_product=config.max_product,
    )
    _emit_verify(config, report)
    return 0 if not report.failures else 1


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, execute, and return the exit code."""
    parser = _build_parser()
    try:
        namespace = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    config = _config_from(namespace)
    try:
        return _dispatch(config)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))
