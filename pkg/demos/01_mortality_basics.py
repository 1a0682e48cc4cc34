"""The Gompertz-Makeham law: survival, hazard, and the identities behind it.

A mortality basis has three numbers: a flat hazard alpha that never goes
away (accidents), and a senescent hazard beta * e**(gamma*x) that doubles
every ln(2)/gamma years.  This script prints the resulting life table
quantities and demonstrates the two structural identities the rest of
the package leans on.
"""

import math

from gmlife import GmParams, cdf, mortality_rate, survival

basis = GmParams(alpha=0.001, beta=0.000012, gamma_exp=0.101314)
print(f"basis: alpha={basis.alpha}, beta={basis.beta}, gamma={basis.gamma_exp}")
print(f"senescent hazard doubles every {math.log(2) / basis.gamma_exp:.2f} years\n")

print(f"{'age':>4} {'l(x)':>12} {'mu(x)':>12} {'F(x)':>12}")
for x in range(0, 111, 10):
    print(f"{x:>4} {survival(basis, x):>12.8f} {mortality_rate(basis, x):>12.8f} "
          f"{cdf(basis, x):>12.8f}")

# Identity 1: the survival function factorizes into its two risks.
# That factorization is what makes the competing-risks Monte-Carlo
# sampler in gmlife.oracle exact.
x = 70.0
flat_only = GmParams(basis.alpha, 0.0, basis.gamma_exp)
senescent_only = GmParams(0.0, basis.beta, basis.gamma_exp)
lhs = survival(basis, x)
rhs = survival(flat_only, x) * survival(senescent_only, x)
print(f"\nfactorization at x={x:.0f}:  l(x) = {lhs:.12f}")
print(f"  flat * senescent        = {rhs:.12f}   (diff {abs(lhs - rhs):.1e})")

# Identity 2: conditional survival is the same law with beta rescaled.
# Ageing by x years just multiplies beta by e**(gamma*x), which is why
# every life value at age x reduces to a value at age 0.
t = 12.5
shifted = GmParams(basis.alpha, basis.beta * math.exp(basis.gamma_exp * x),
                   basis.gamma_exp)
cond = survival(basis, x + t) / survival(basis, x)
print(f"\nage shift at x={x:.0f}, t={t}:  l(x+t)/l(x) = {cond:.12f}")
print(f"  same law, beta scaled       = {survival(shifted, t):.12f}")
