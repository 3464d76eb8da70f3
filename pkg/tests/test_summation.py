"""Summation engine: termination rules, error estimates, invariants."""

from fractions import Fraction
from math import factorial

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mpf

from zetataylor.exact import bernoulli_polynomial, stirling1
from zetataylor.summation import (
    NonFiniteTermError,
    eval_polynomial,
    sum_semiconvergent,
    to_mpf,
)

# log(2*pi)/2, frozen from an independent 58-digit evaluation
HALF_LOG_2PI = "0.9189385332046727417803297364056176398613974736377834128"


def riemann_like_terms(n: int, count: int, a=Fraction(1)):
    """Exact terms sign * s1(k, n) * B_{k+1}(a-1) / (k+1)! for k >= n."""
    out = []
    for k in range(n, n + count):
        sign = -1 if k % 2 == 0 else 1
        out.append(
            sign * stirling1(k, n) * bernoulli_polynomial(k + 1, a - 1) / factorial(k + 1)
        )
    return out


def test_all_zero_series_converges():
    res = sum_semiconvergent(iter([Fraction(0)] * 10), start=0)
    assert res.value == 0
    assert res.terminated_by == "converged"
    assert res.truncation_index == 1  # second consecutive negligible term


def test_geometric_series_converges_to_closed_form():
    terms = ((-Fraction(1, 2)) ** k for k in range(200))
    res = sum_semiconvergent(terms, start=0, max_terms=150, convergence_threshold=mpf("1e-30"))
    assert res.terminated_by == "converged"
    assert abs(res.value - to_mpf(Fraction(2, 3))) <= mpf("1e-30")
    assert res.error_estimate == mpf("1e-30")


def test_alternating_series_error_bounded_by_first_omitted():
    # sum (-1)^(k+1) / k^2 = pi^2 / 12
    res = sum_semiconvergent(
        ((-1) ** (k + 1) * Fraction(1, k * k) for k in range(1, 2000)),
        start=1,
        max_terms=500,
        convergence_threshold=mpf("1e-8"),
    )
    limit = mpmath.pi**2 / 12
    first_omitted = Fraction(1, (res.truncation_index + 1) ** 2)
    assert abs(res.value - limit) <= to_mpf(first_omitted)


def test_riemann_n1_minimal_term_truncation():
    # magnitudes decrease to k = 7 then grow; zeros at even k are skipped.
    # Frozen expectations from exact tabulation of the first 30 terms:
    # min |term| = 1/1680 at k = 7, first omitted nonzero term 1/1188 at k = 9,
    # partial sum through k = 7 equals 407/5040.
    with mpmath.workdps(50):
        res = sum_semiconvergent(iter(riemann_like_terms(1, 40)), start=1, trace=True)
        expected_estimate = to_mpf(Fraction(1, 1188))
    assert res.terminated_by == "minimal_term"
    assert res.truncation_index == 8  # the zero at k = 8 adds nothing
    assert res.error_estimate == expected_estimate
    assert abs(res.value - to_mpf(Fraction(407, 5040))) < mpf("1e-45")
    # shifted by the constant offset the sum approaches -log(2*pi)/2
    assert abs((-1 + res.value) + mpf(HALF_LOG_2PI)) <= 2 * res.error_estimate
    assert mpf("1e-4") < res.error_estimate < mpf("1e-2")
    mags = {r.k: abs(r.term) for r in res.trace if r.term != 0}
    assert min(mags, key=mags.get) == 7


def test_zero_interleaved_growth_detection():
    # decreasing, a zero, then growth: 8, -4, 0, 2, 0, -3, 5 -> min at 2
    vals = [8, -4, 0, 2, 0, -3, 5, -9]
    res = sum_semiconvergent(iter(vals), start=0, trace=True)
    assert res.terminated_by == "minimal_term"
    assert res.truncation_index == 4  # trailing zero after the k=3 minimum
    assert res.value == to_mpf(8 - 4 + 0 + 2 + 0)
    assert res.error_estimate == 3


def test_tie_at_minimum_truncates_earlier_index():
    vals = [5, -3, 3, -9, 12]
    res = sum_semiconvergent(iter(vals), start=0)
    assert res.terminated_by == "minimal_term"
    assert res.truncation_index == 1
    assert res.value == to_mpf(2)
    assert res.error_estimate == 3


def test_growth_sightings_persist_across_new_minima():
    # a decaying spur keeps producing new minima between growing terms;
    # the two growth sightings still accumulate and stop the sum at the
    # latest minimum
    vals = [10, -5, 1, -4, Fraction(1, 2), -6, 20]
    res = sum_semiconvergent(iter(vals), start=0)
    assert res.terminated_by == "minimal_term"
    assert res.truncation_index == 4
    assert res.value == to_mpf(Fraction(5, 2))
    assert res.error_estimate == 6


def test_immediately_growing_series_reports_max_terms():
    vals = [2, -5, 9, -20, 50, -120, 300, -800]
    res = sum_semiconvergent(iter(vals), start=0, max_terms=8)
    assert res.terminated_by == "max_terms"
    assert res.truncation_index == 7
    assert res.error_estimate == 800


def test_non_finite_term_raises_with_index():
    vals = [mpf(1), mpf(0.5), mpf("nan")]
    with pytest.raises(NonFiniteTermError) as exc:
        sum_semiconvergent(iter(vals), start=3)
    assert exc.value.index == 5


def test_precondition_validation():
    with pytest.raises(ValueError):
        sum_semiconvergent(iter([1, 2, 3]), max_terms=1)
    with pytest.raises(ValueError):
        sum_semiconvergent(iter([1, 2, 3]), convergence_threshold=0)
    with pytest.raises(ValueError):
        sum_semiconvergent(iter([]))


def test_determinism_bit_identical():
    def run():
        return sum_semiconvergent(iter(riemann_like_terms(2, 40, Fraction(3, 2))), start=2)

    with mpmath.workdps(50):
        r1, r2 = run(), run()
    assert r1.value._mpf_ == r2.value._mpf_
    assert r1.error_estimate._mpf_ == r2.error_estimate._mpf_
    assert r1.truncation_index == r2.truncation_index


@settings(max_examples=80, deadline=None)
@given(
    st.lists(
        st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, width=32),
        min_size=1,
        max_size=40,
    )
)
def test_trace_telescopes_and_value_matches(vals):
    res = sum_semiconvergent(iter(vals), start=0, trace=True)
    assert res.trace is not None
    prev = mpf(0)
    for rec in res.trace:
        assert rec.partial_sum == prev + rec.term
        prev = rec.partial_sum
    cut = [r for r in res.trace if r.k == res.truncation_index]
    assert len(cut) == 1
    assert res.value == cut[0].partial_sum
    assert res.error_estimate >= 0
    assert res.terminated_by in ("minimal_term", "converged", "max_terms")


def test_eval_polynomial_examples():
    assert eval_polynomial([Fraction(-1, 2), Fraction(1)], mpf(1)) == mpf(0.5)
    assert eval_polynomial([], mpf(3)) == 0
    assert eval_polynomial((0, 1, 3, 1), mpf(1)) == mpf(5)


def test_to_mpf_faithful_rounding():
    with mpmath.workdps(30):
        got = to_mpf(Fraction(1, 3))
    with mpmath.workdps(80):
        want = mpmath.mpf(1) / 3
        assert abs(got - want) <= abs(got) * mpf(10) ** (-29)
