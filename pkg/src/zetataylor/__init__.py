"""Taylor coefficients of the Hurwitz, Riemann and Lerch zeta functions at
s = 0.

The main entry points are `hurwitz_coefficient`, `riemann_coefficient` and
`lerch_coefficient`, which evaluate the exact Stirling/Bernoulli
coefficient series with minimal-term truncation and report the value
together with an error estimate and a per-term trace.  The `reference`
module provides an independent numerical route (Euler-Maclaurin plus
contour extraction) used to validate the series.
"""

from .coefficients import (
    CoefficientQuery,
    CoefficientResult,
    compute_coefficient,
    etf_check,
    hurwitz_coefficient,
    hurwitz_coefficient_special,
    lerch_coefficient,
    log_gamma_series,
    riemann_coefficient,
    system_residual,
)
from .exact import (
    apostol_bernoulli,
    bernoulli_number,
    bernoulli_polynomial,
    exp_polynomial_coeffs,
    harmonic_number,
    stirling1,
    stirling2,
)
from .reference import (
    OracleConfig,
    OracleValue,
    hurwitz_zeta,
    lerch_phi,
    log_gamma_ref,
    taylor_coefficient_contour,
)
from .summation import (
    NonFiniteTermError,
    SemiConvergentResult,
    TraceRecord,
    eval_polynomial,
    sum_semiconvergent,
    to_mpf,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientQuery",
    "CoefficientResult",
    "compute_coefficient",
    "hurwitz_coefficient",
    "riemann_coefficient",
    "lerch_coefficient",
    "hurwitz_coefficient_special",
    "log_gamma_series",
    "etf_check",
    "system_residual",
    "stirling1",
    "stirling2",
    "exp_polynomial_coeffs",
    "bernoulli_number",
    "bernoulli_polynomial",
    "apostol_bernoulli",
    "harmonic_number",
    "sum_semiconvergent",
    "eval_polynomial",
    "to_mpf",
    "SemiConvergentResult",
    "TraceRecord",
    "NonFiniteTermError",
    "OracleConfig",
    "OracleValue",
    "hurwitz_zeta",
    "lerch_phi",
    "taylor_coefficient_contour",
    "log_gamma_ref",
    "__version__",
]
