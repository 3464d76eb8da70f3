"""Arbitrary-precision plumbing and the summation engine for
semi-convergent (asymptotic) series.

The number type throughout is mpmath's mpf at the caller's working
precision (`mpmath.mp.dps`, in decimal digits).  Exact inputs (ints,
Fractions) are converted once, at the summation boundary, with a few guard
digits so the conversion itself is correctly rounded.

A semi-convergent series is divergent, but its partial sums first approach
the target value; the usable accuracy is set by the smallest-magnitude
term.  `sum_semiconvergent` accumulates terms until one of:

* two consecutive terms fall below the convergence threshold (the series
  behaved like an ordinary convergent one), or
* the terms have passed through a minimum: after at least one magnitude
  decrease has been seen, two further terms each at least as large as
  their predecessor are taken as evidence that the minimum is behind us.
  The sum is then truncated just after the smallest-magnitude term and the
  first omitted term is reported as the error estimate, or
* `max_terms` terms have been consumed (no minimum was detected; the
  magnitude of the last term is reported as the error estimate, which for
  a divergent tail honestly signals that no accuracy was achieved).

Terms below the convergence threshold (in particular exact zeros from
vanishing odd-index Bernoulli numbers) are included in the sum but ignored
by the minimum detection, which would otherwise mistake every such dip for
renewed convergence.  The two growth sightings need not be consecutive:
series whose odd-index terms are exponentially small but not exactly zero
interleave a decaying subsequence with the structurally growing one, and
requiring adjacency would defeat detection exactly there.  Ties at the
minimum truncate at the earlier index, which keeps the error estimate
conservative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence

import mpmath
from mpmath import mp, mpf

__all__ = [
    "TraceRecord",
    "SemiConvergentResult",
    "NonFiniteTermError",
    "sum_semiconvergent",
    "eval_polynomial",
    "to_mpf",
]

_CONVERSION_GUARD_DPS = 10

TerminationReason = Literal["minimal_term", "converged", "max_terms"]


def to_mpf(x) -> mpf:
    """Convert x (int, Fraction, str, float, mpf) to mpf at the current
    working precision.  Fraction conversion is done with guard digits so
    the single final rounding is faithful."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return mpmath.mpf(x.numerator)
        with mpmath.extradps(_CONVERSION_GUARD_DPS):
            v = mpmath.mpf(x.numerator) / x.denominator
        return +v
    if isinstance(x, int):
        return mpmath.mpf(x)
    return +mpmath.mpmathify(x)


def eval_polynomial(coeffs: Sequence, x) -> mpf:
    """Horner evaluation at working precision of a polynomial given by
    ascending coefficients (exact coefficients are converted at full
    precision). Empty coefficient list evaluates to 0."""
    xv = to_mpf(x)
    acc = mpf(0)
    for c in reversed(coeffs):
        acc = acc * xv + to_mpf(c)
    return acc


@dataclass(frozen=True)
class TraceRecord:
    """One row of a summation trace: term index, term value and the
    running partial sum after adding it."""

    k: int
    term: mpf
    partial_sum: mpf


@dataclass(frozen=True)
class SemiConvergentResult:
    """Outcome of a truncated summation.

    `value` is the partial sum through `truncation_index`.  For
    minimal-term truncation `error_estimate` is the magnitude of the first
    omitted term; for threshold convergence it is the threshold itself;
    when `max_terms` was hit it is the magnitude of the last generated
    term.  `trace` (if requested) covers every generated term, including
    the ones past the truncation point that triggered the stop.
    """

    value: mpf
    error_estimate: mpf
    truncation_index: int
    terminated_by: TerminationReason
    trace: tuple[TraceRecord, ...] | None = None


class NonFiniteTermError(ArithmeticError):
    """A term generator produced a NaN or infinity; `index` is the term
    index at fault."""

    def __init__(self, index: int):
        super().__init__(f"non-finite term at index {index}")
        self.index = index


def sum_semiconvergent(
    terms: Iterable,
    *,
    start: int = 0,
    max_terms: int = 64,
    convergence_threshold=None,
    trace: bool = False,
) -> SemiConvergentResult:
    """Sum an indexed series (term k = start, start+1, ...) with
    minimal-term truncation, as described in the module docstring.

    `terms` may yield anything `to_mpf` accepts, so exact generators can
    yield Fractions directly.  The generator is consumed at most
    `max_terms` times and must be fresh (not shared between calls).
    """
    if max_terms < 2:
        raise ValueError("max_terms must be at least 2")
    if convergence_threshold is None:
        threshold = mpf(10) ** (-(mp.dps + 5))
    else:
        threshold = to_mpf(convergence_threshold)
    if not threshold > 0:
        raise ValueError("convergence_threshold must be positive")

    records: list[TraceRecord] = []
    partial = mpf(0)
    min_mag = None
    min_pos: int | None = None
    prev_mag = None
    seen_descent = False
    growth_sightings = 0
    consecutive_small = 0
    reason: TerminationReason | None = None

    k = start - 1
    for raw in terms:
        k += 1
        term = to_mpf(raw)
        if not mpmath.isfinite(term):
            raise NonFiniteTermError(k)
        partial = partial + term
        records.append(TraceRecord(k, term, partial))
        mag = abs(term)
        if mag < threshold:
            consecutive_small += 1
            if consecutive_small >= 2:
                reason = "converged"
                break
        else:
            consecutive_small = 0
            if prev_mag is not None:
                if mag < prev_mag:
                    seen_descent = True
                elif seen_descent:
                    growth_sightings += 1
            if min_mag is None or mag < min_mag:
                min_mag = mag
                min_pos = k
            prev_mag = mag
            if growth_sightings >= 2:
                reason = "minimal_term"
                break
        if len(records) >= max_terms:
            reason = "max_terms"
            break

    if not records:
        raise ValueError("term generator produced no terms")
    if reason is None:
        # generator ran dry before any stopping rule fired
        reason = "max_terms"

    kept = tuple(records) if trace else None
    if reason == "converged":
        last = records[-1]
        return SemiConvergentResult(last.partial_sum, +threshold, last.k, reason, kept)
    if reason == "max_terms":
        last = records[-1]
        return SemiConvergentResult(
            last.partial_sum, abs(last.term), last.k, reason, kept
        )
    # minimal_term: truncate just before the first non-negligible term
    # after the minimum; everything in between is zero-like and does not
    # change the partial sum.
    assert min_pos is not None
    next_pos = None
    for rec in records[min_pos - start + 1 :]:
        if abs(rec.term) >= threshold:
            next_pos = rec.k
            break
    assert next_pos is not None
    cut = records[next_pos - start - 1]
    omitted = records[next_pos - start]
    return SemiConvergentResult(
        cut.partial_sum, abs(omitted.term), cut.k, reason, kept
    )
