"""Anatomy of a semi-convergent coefficient series.

The first Taylor coefficient of the Riemann zeta function at s = 0 equals
-log(2*pi)/2 = -0.9189385...  The Stirling/Bernoulli series for it is
divergent, but its terms first shrink, reach a minimal magnitude near
k = 7, and only then blow up.  Truncating at the minimum gives the value
to about the size of the first omitted term.  This script prints the whole
story term by term.
"""

import mpmath
from mpmath import mp, mpf

from zetataylor import riemann_coefficient

mp.dps = 30

res = riemann_coefficient(1, digits=30, trace=True)

print("term-by-term trace of the n=1 series (zeros come from vanishing")
print("odd-index Bernoulli numbers and are ignored by the truncation logic):")
print(f"{'k':>3} {'term':>16} {'partial sum':>16}")
for rec in res.series.trace:
    marker = ""
    if rec.k == res.series.truncation_index:
        marker = "  <- truncated here"
    print(f"{rec.k:>3} {mpmath.nstr(rec.term, 8):>16} {mpmath.nstr(rec.partial_sum, 8):>16}{marker}")

print()
print(f"terminated_by     = {res.series.terminated_by}")
print(f"truncation index  = {res.series.truncation_index}")
print(f"series value      = {mpmath.nstr(res.series.value, 12)} (offset -1 applied after)")
print(f"coefficient       = {mpmath.nstr(res.value, 12)}")
print(f"error estimate    = {mpmath.nstr(res.error_estimate, 4)}")

target = -mpmath.log(2 * mpmath.pi) / 2
print(f"-log(2*pi)/2      = {mpmath.nstr(target, 12)}")
print(f"actual error      = {mpmath.nstr(abs(res.value - target), 4)}")
print()
print("the actual error sits comfortably below the first-omitted-term estimate;")
print("asking for more terms would make the result worse, not better.")
