"""Commutation functions D, N, M without numerical integration.

D(x) discounts survival, N and M integrate D and mu*D out to infinity.
The integrals collapse: D(x) is survival at a rate-shifted basis,
N(x) = D(x) * a_bar(x), and M(x) = D(x) - delta * N(x).  Columns at twice
the rate (D2/N2/M2) feed variance calculations and come from the same
formulas.
"""

from gmlife import GmParams, annuity, commutation_row

basis = GmParams(alpha=0.001, beta=0.000012, gamma_exp=0.101314)
delta = 0.026559

print(f"{'age':>4} {'D(x)':>12} {'N(x)':>12} {'M(x)':>12}"
      f" {'D2(x)':>12} {'N2(x)':>12} {'M2(x)':>12}")
for x in range(0, 101, 10):
    single = commutation_row(basis, delta, x)
    double = commutation_row(basis, delta, x, double_rate=True)
    print(f"{x:>4} {single.d_val:>12.8f} {single.n_val:>12.8f} {single.m_val:>12.8f}"
          f" {double.d_val:>12.8f} {double.n_val:>12.8f} {double.m_val:>12.8f}")

# The standard ratio identity: a_bar(x) = N(x)/D(x).
x = 40.0
row = commutation_row(basis, delta, x)
print(f"\nat x={x:.0f}:  N/D = {row.n_val / row.d_val:.12f}")
print(f"  a_bar      = {annuity(basis, delta, x):.12f}")

# And M/D is the single-premium rate of a whole-life benefit of 1 paid
# at death; with delta = 0 it degenerates to the total death probability.
print(f"  M/D        = {row.m_val / row.d_val:.12f}")
zero_rate = commutation_row(basis, 0.0, x)
print(f"  M/D at delta=0 = {zero_rate.m_val / zero_rate.d_val:.12f} (must be 1)")
