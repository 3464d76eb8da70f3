"""Self-check suites: exact identities, coefficient cross-checks, and
series-vs-reference agreement.

Each check returns (ok, detail); the runner prints one deterministic
PASS/FAIL line per check, so repeated runs at the same precision produce
byte-identical reports.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import mpmath
from mpmath import mpf, workdps

from . import coefficients as coeffs
from . import exact, reference
from .summation import eval_polynomial, to_mpf

__all__ = ["SUITES", "run_suite", "available_suites"]


def _fmt(x) -> str:
    return mpmath.nstr(abs(to_mpf(x)), 3, strip_zeros=True)


# ----------------------------- identities -----------------------------


def check_stirling_orthogonality(digits):
    worst = None
    for k in range(31):
        for m in range(k + 1):
            s = sum(
                (-1) ** (k - n) * exact.stirling1(k, n) * exact.stirling2(n, m)
                for n in range(m, k + 1)
            )
            want = 1 if k == m else 0
            if s != want:
                return False, f"mismatch at (k={k}, m={m}): {s}"
            worst = (k, m)
    return True, f"exact through k={worst[0]}"


def check_stirling_basis_roundtrip(digits):
    for n in range(21):
        # expand x^n over the exponential polynomials, then substitute their
        # monomial coefficients back; must recover the single monomial x^n
        out = [0] * (n + 1)
        for k in range(n + 1):
            c = (-1) ** (n - k) * exact.stirling1(n, k)
            if c == 0:
                continue
            for m, s2 in enumerate(exact.exp_polynomial_coeffs(k)):
                out[m] += c * s2
        want = [0] * n + [1]
        if out != want:
            return False, f"round trip failed at n={n}: {out}"
    return True, "exact through n=20"


def check_stirling_columns(digits):
    for k in range(1, 26):
        if exact.stirling1(k, 1) != factorial(k - 1):
            return False, f"column 1 failed at k={k}"
        expect = factorial(k - 1) * exact.harmonic_number(k - 1)
        if Fraction(exact.stirling1(k, 2)) != expect:
            return False, f"column 2 failed at k={k}"
        if exact.stirling1(k, k) != 1 or exact.stirling1(k, 0) != 0:
            return False, f"edge columns failed at k={k}"
    return True, "factorial and harmonic columns exact through k=25"


def check_bernoulli_poly_at_zero(digits):
    for n in range(41):
        if exact.bernoulli_polynomial(n, 0) != exact.bernoulli_number(n):
            return False, f"B_{n}(0) != B_{n}"
    return True, "exact through n=40"


def check_apostol_closed_forms(digits):
    grid = [
        (Fraction(p, q), lam)
        for (p, q) in [(1, 2), (1, 1), (3, 2), (2, 1), (-1, 3)]
        for lam in [Fraction(2), Fraction(1, 2), Fraction(-1), Fraction(3, 7)]
    ]
    for a, lam in grid:
        d = lam - 1
        if exact.apostol_bernoulli(0, a, lam) != 0:
            return False, f"beta_0 failed at (a={a}, lam={lam})"
        if exact.apostol_bernoulli(1, a, lam) != 1 / d:
            return False, f"beta_1 failed at (a={a}, lam={lam})"
        want = (2 * a * d - 2 * lam) / d**2
        if exact.apostol_bernoulli(2, a, lam) != want:
            return False, f"beta_2 failed at (a={a}, lam={lam})"
    return True, f"closed forms exact on {len(grid)} rational points"


def check_apostol_generating_function(digits):
    # sum_{n<=N} beta_n(a, lam) z^n / n! vs z e^(az)/(lam e^z - 1) at z=1/10
    lam, a, N = Fraction(2), Fraction(1), 12
    z = Fraction(1, 10)
    with workdps(digits):
        lhs = to_mpf(
            sum(
                exact.apostol_bernoulli(n, a, lam) * z**n / factorial(n)
                for n in range(N + 1)
            )
        )
        zv = to_mpf(z)
        rhs = zv * mpmath.exp(to_mpf(a) * zv) / (to_mpf(lam) * mpmath.exp(zv) - 1)
        tail = abs(
            to_mpf(exact.apostol_bernoulli(N + 1, a, lam) * z ** (N + 1))
            / factorial(N + 1)
        )
        delta = abs(lhs - rhs)
        ok = delta <= 4 * tail
        return ok, f"delta={_fmt(delta)} bound={_fmt(4 * tail)}"


def check_etf_identity(digits):
    polys = [
        (1,),
        (0, 1),
        (0, 0, 1),
        (1, -2, 0, 3),
        (0, 1, 0, 0, 0, 0, 1),
        (2, 0, -1, 0, 0, 0, 5),
    ]
    xs = [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2)]
    tol = mpf(10) ** (-25)
    worst = mpf(0)
    with workdps(digits):
        for p in polys:
            for x in xs:
                lhs, rhs = coeffs.etf_check(p, x, K=120, digits=digits)
                worst = max(worst, abs(lhs - rhs))
        ok = worst <= tol
    return ok, f"max delta={_fmt(worst)} (tol 1e-25)"


# ----------------------------- coefficients -----------------------------


def check_hurwitz_n0_closed_form(digits):
    tol = mpf(10) ** (-(digits - 3))
    worst = mpf(0)
    with workdps(digits):
        grid = [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), mpmath.e]
        for a in grid:
            got = coeffs.hurwitz_coefficient(0, a, digits=digits).value
            want = mpf(0.5) - to_mpf(a)
            worst = max(worst, abs(got - want))
        ok = worst <= tol
    return ok, f"max delta={_fmt(worst)} over {len(grid)} shifts"


def check_riemann_n1(digits):
    with workdps(digits):
        res = coeffs.riemann_coefficient(1, digits=digits)
        want = -mpmath.log(2 * mpmath.pi) / 2
        delta = abs(res.value - want)
        ok = delta <= 2 * res.error_estimate
    return ok, f"delta={_fmt(delta)} est={_fmt(res.error_estimate)}"


def check_hurwitz_n1_loggamma(digits):
    ok = True
    details = []
    with workdps(digits):
        for a in [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]:
            res = coeffs.hurwitz_coefficient(1, a, digits=digits)
            want = reference.log_gamma_ref(a, digits=digits) - mpmath.log(2 * mpmath.pi) / 2
            delta = abs(res.value - want)
            ok = ok and delta <= 2 * res.error_estimate
            details.append(f"a={a}:{_fmt(delta)}")
    return ok, " ".join(details)


def check_special_vs_general(digits):
    ok = True
    worst = mpf(0)
    with workdps(digits):
        for n in (1, 2):
            for a in [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]:
                spec = coeffs.hurwitz_coefficient_special(n, a, digits=digits)
                gen = coeffs.hurwitz_coefficient(n, a, digits=digits)
                delta = abs(spec.value - gen.value)
                bound = spec.error_estimate + gen.error_estimate
                ok = ok and delta <= bound
                worst = max(worst, delta)
    return ok, f"max spread={_fmt(worst)}"


def check_loggamma_series_zeros(digits):
    ok = True
    details = []
    with workdps(digits):
        for a in (Fraction(0), Fraction(1)):
            res = coeffs.log_gamma_series(a, digits=digits)
            delta = abs(res.value)
            ok = ok and delta <= 2 * res.error_estimate
            details.append(f"a={a}:{_fmt(delta)}")
    return ok, " ".join(details)


def check_lerch_c0(digits):
    tol = mpf(10) ** (-(digits - 3))
    worst = mpf(0)
    lams = [Fraction(-1), Fraction(-1, 2), Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)]
    shifts = [Fraction(1, 2), Fraction(1), Fraction(2)]
    with workdps(digits):
        for lam in lams:
            for a in shifts:
                got = coeffs.lerch_coefficient(0, a, lam, digits=digits).value
                want = to_mpf(Fraction(1) / (1 - lam))
                worst = max(worst, abs(got - want))
        ok = worst <= tol
    return ok, f"max delta={_fmt(worst)} on {len(lams) * len(shifts)} points"


def check_sign_parity(digits):
    for n in range(41):
        want = 1 if n % 2 == 0 else -1
        for k in range(n, 61):
            if coeffs.hurwitz_term_sign(k) * coeffs.lerch_term_sign(n, k) != want:
                return False, f"sign mismatch at (n={n}, k={k})"
    return True, "prefactors agree (even n) / oppose (odd n) through n=40"


def check_system_residual(digits):
    with workdps(digits):
        r0 = coeffs.system_residual("hurwitz", Fraction(1), k=0, digits=digits)
        est0 = coeffs.hurwitz_coefficient(0, Fraction(1), digits=digits).error_estimate
        ok = abs(r0) <= est0
        r1 = coeffs.system_residual("hurwitz", Fraction(2), k=1, N=6, digits=digits)
        ok = ok and mpmath.isfinite(r1)
        r2 = coeffs.system_residual("lerch", Fraction(1), Fraction(1, 2), k=0, digits=digits)
        res0 = coeffs.lerch_coefficient(0, Fraction(1), Fraction(1, 2), digits=digits)
        ok = ok and abs(r2) <= res0.error_estimate
    return ok, f"hurwitz k0={_fmt(r0)} smoke k1={_fmt(r1)} lerch k0={_fmt(r2)}"


# ----------------------------- reference -----------------------------


def check_em_reference_values(digits):
    tol = mpf(10) ** (-digits)
    with workdps(digits):
        worst = abs(reference.hurwitz_zeta(2, 1, digits=digits) - mpmath.pi**2 / 6)
        for a in (Fraction(1, 4), Fraction(1), Fraction(7, 2)):
            got = reference.hurwitz_zeta(0, a, digits=digits)
            worst = max(worst, abs(got - (mpf(0.5) - to_mpf(a))))
        worst = max(worst, abs(reference.hurwitz_zeta(-1, 1, digits=digits) + Fraction(1, 12)))
        ok = worst <= tol
    return ok, f"max delta={_fmt(worst)}"


def _neg_int_tol(digits):
    # rounding in the Euler-Maclaurin assembly is ~1e15 ulps at the working
    # precision (digits + 10 guard digits), so 1e-40 is attainable from 50
    # digits up; below that the bound scales with the precision
    return mpf(10) ** (-min(40, digits - 8))


def check_em_negative_integers(digits):
    tol = _neg_int_tol(digits)
    worst = mpf(0)
    with workdps(digits):
        for k in range(9):
            for a in (Fraction(1, 2), Fraction(1), Fraction(2)):
                got = reference.hurwitz_zeta(-k, a, digits=digits)
                want = to_mpf(-exact.bernoulli_polynomial(k + 1, a) / (k + 1))
                worst = max(worst, abs(got - want))
        ok = worst <= tol
    return ok, f"max delta={_fmt(worst)} (tol {_fmt(tol)})"


def check_em_doubling(digits):
    tol = mpf(10) ** (-(digits + 3))
    base = reference.OracleConfig.for_digits(digits)
    more_n = reference.OracleConfig(base.em_cutoff * 2, base.em_order)
    more_j = reference.OracleConfig(base.em_cutoff, base.em_order * 2)
    worst = mpf(0)
    with workdps(digits):
        half = mpf(0.5)
        ss = [mpf(0), half, -half, mpmath.mpc(0, half), mpmath.mpc(0, -half)]
        for s in ss:
            for a in (Fraction(1, 2), Fraction(1), Fraction(2)):
                v0 = reference.hurwitz_zeta(s, a, base, digits=digits)
                worst = max(worst, abs(v0 - reference.hurwitz_zeta(s, a, more_n, digits=digits)))
                worst = max(worst, abs(v0 - reference.hurwitz_zeta(s, a, more_j, digits=digits)))
        ok = worst <= tol
    return ok, f"max shift={_fmt(worst)} (tol {_fmt(tol)})"


def check_lerch_negative_integers(digits):
    tol = _neg_int_tol(digits)
    worst = mpf(0)
    with workdps(digits):
        for m in range(7):
            for lam in (Fraction(1, 3), Fraction(1, 2)):
                for a in (Fraction(1, 2), Fraction(1)):
                    got = reference.lerch_phi(lam, -m, a, digits=digits)
                    want = to_mpf(-exact.apostol_bernoulli(m + 1, a, lam) / (m + 1))
                    worst = max(worst, abs(got - want))
        ok = worst <= tol
    return ok, f"max delta={_fmt(worst)} (tol {_fmt(tol)})"


def check_contour_vs_series(digits):
    ok = True
    details = []
    with workdps(digits):
        for a in (Fraction(1, 2), Fraction(1), Fraction(2)):
            for n in range(5):
                ser = coeffs.hurwitz_coefficient(n, a, digits=digits)
                orc = reference.taylor_coefficient_contour("hurwitz", n, a, digits=digits)
                delta = abs(ser.value - orc.value)
                bound = ser.error_estimate + orc.error_estimate
                ok = ok and delta <= bound
            details.append(f"a={a}:n<=4 ok")
        for n in (0, 1):
            ser = coeffs.lerch_coefficient(n, 1, Fraction(1, 2), digits=digits)
            orc = reference.taylor_coefficient_contour(
                "lerch", n, 1, Fraction(1, 2), digits=digits
            )
            ok = ok and abs(ser.value - orc.value) <= ser.error_estimate + orc.error_estimate
        details.append("lerch n<=1 ok")
    return ok, " ".join(details) if ok else "series/reference disagreement"


def check_contour_stability(digits):
    tol = mpf(10) ** (-15)
    worst = mpf(0)
    with workdps(digits):
        for a in (Fraction(1), Fraction(3, 2)):
            cfg_a = reference.OracleConfig(
                digits + 10, digits // 2 + 10, Fraction(1, 4), 64
            )
            cfg_b = reference.OracleConfig(
                digits + 10, digits // 2 + 10, Fraction(1, 2), 128
            )
            for n in range(7):
                va = reference.taylor_coefficient_contour("hurwitz", n, a, cfg=cfg_a, digits=digits)
                vb = reference.taylor_coefficient_contour("hurwitz", n, a, cfg=cfg_b, digits=digits)
                worst = max(worst, abs(va.value - vb.value))
        ok = worst <= tol
    return ok, f"radius 1/4 vs 1/2: max delta={_fmt(worst)}"


def check_loggamma_ref(digits):
    tol = mpf(10) ** (-digits)
    with workdps(digits):
        worst = max(
            abs(reference.log_gamma_ref(1, digits=digits)),
            abs(reference.log_gamma_ref(2, digits=digits)),
            abs(reference.log_gamma_ref(Fraction(1, 2), digits=digits) - mpmath.log(mpmath.pi) / 2),
        )
        # duplication: logG(2a) = logG(a) + logG(a+1/2) + (2a-1) log 2 - log(pi)/2
        for a in (mpf(0.3), mpf(1.7)):
            lhs = reference.log_gamma_ref(2 * a, digits=digits)
            rhs = (
                reference.log_gamma_ref(a, digits=digits)
                + reference.log_gamma_ref(a + mpf(0.5), digits=digits)
                + (2 * a - 1) * mpmath.log(2)
                - mpmath.log(mpmath.pi) / 2
            )
            worst = max(worst, abs(lhs - rhs))
        ok = worst <= 10 * tol
    return ok, f"max delta={_fmt(worst)}"


SUITES = {
    "identities": [
        ("stirling_orthogonality", check_stirling_orthogonality),
        ("stirling_basis_roundtrip", check_stirling_basis_roundtrip),
        ("stirling_columns", check_stirling_columns),
        ("bernoulli_poly_at_zero", check_bernoulli_poly_at_zero),
        ("apostol_closed_forms", check_apostol_closed_forms),
        ("apostol_generating_function", check_apostol_generating_function),
        ("etf_identity", check_etf_identity),
    ],
    "coefficients": [
        ("hurwitz_n0_closed_form", check_hurwitz_n0_closed_form),
        ("riemann_n1_log2pi", check_riemann_n1),
        ("hurwitz_n1_loggamma", check_hurwitz_n1_loggamma),
        ("special_vs_general", check_special_vs_general),
        ("loggamma_series_zeros", check_loggamma_series_zeros),
        ("lerch_c0_geometric", check_lerch_c0),
        ("sign_parity", check_sign_parity),
        ("system_residual", check_system_residual),
    ],
    "oracle": [
        ("em_reference_values", check_em_reference_values),
        ("em_negative_integers", check_em_negative_integers),
        ("em_doubling_stability", check_em_doubling),
        ("lerch_negative_integers", check_lerch_negative_integers),
        ("contour_vs_series", check_contour_vs_series),
        ("contour_stability", check_contour_stability),
        ("loggamma_reference", check_loggamma_ref),
    ],
}


def available_suites() -> tuple[str, ...]:
    return tuple(SUITES) + ("all",)


def run_suite(name: str, digits: int, out) -> bool:
    """Run one suite (or 'all'); print one line per check to `out`.
    Returns True iff every check passed."""
    if name == "all":
        ok = True
        for sub in SUITES:
            ok = run_suite(sub, digits, out) and ok
        return ok
    checks = SUITES[name]
    all_ok = True
    for label, fn in checks:
        ok, detail = fn(digits)
        all_ok = all_ok and ok
        status = "PASS" if ok else "FAIL"
        print(f"{status} {name}/{label}: {detail}", file=out)
    return all_ok
