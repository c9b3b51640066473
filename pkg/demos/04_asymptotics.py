"""Growth rates and densities.

The characteristic polynomial of the recurrence has a unique real root
kappa in (1, Lam].  The terms grow like B * kappa^n, and the slow
sequence has density 1 - 1/kappa: that fraction of positive integers
are hit exactly once more than the baseline.

This script compares the predicted density with empirical ratios at
finite n, and estimates the growth constant B.
"""

from slowseq import (
    dominant_root,
    empirical_ratio,
    growth_constant_estimate,
    limit_ratio,
    parse_recurrence,
)

for text in ("2", "3", "1,1", "2,1", "1,2,0,3"):
    rec = parse_recurrence(text)
    kappa = dominant_root(rec)
    predicted = limit_ratio(rec)
    observed = float(empirical_ratio(rec, 0, 10**5))
    print(f"<{text}>: kappa = {kappa:.8f}   "
          f"predicted density = {predicted:.6f}   "
          f"L(1e5)/1e5 = {observed:.6f}")

print()
print("Growth constant estimates a_n / kappa^n:")
rec = parse_recurrence("1,1")
for n in (10, 20, 40, 80):
    print(f"  <1,1> at n={n}: {growth_constant_estimate(rec, n):.10f}")
print("  (limit is phi^2 / sqrt(5) = 1.1708203932...)")
