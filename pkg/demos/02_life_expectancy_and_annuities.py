"""Life expectancy and annuity values in closed form.

The expected remaining lifetime and the continuous annuity value both
come out of one gamma-function formula: discounting at force of interest
delta is the same as adding delta to the flat hazard, and ageing by x
years rescales beta.  Nothing here integrates anything.
"""

from gmlife import (
    GmParams,
    ageing_factor,
    annuity,
    e0,
    positive_shape_check,
    remaining_life,
)

basis = GmParams(alpha=0.001, beta=0.000012, gamma_exp=0.101314)
delta = 0.026559

print(f"life expectancy at birth: {e0(basis):.6f} years")
print(f"gamma-route shape 1-(alpha+delta)/gamma: "
      f"{positive_shape_check(basis, delta):.6f} (positive, so the plain "
      "gamma CDF route applies)\n")

print(f"{'age':>4} {'e_x':>10} {'a_bar(x)':>10} {'ageing factor':>14}")
for x in range(0, 101, 10):
    print(f"{x:>4} {remaining_life(basis, x):>10.4f} "
          f"{annuity(basis, delta, x):>10.4f} "
          f"{ageing_factor(basis, delta, x):>14.6f}")

# Without senescence the annuity is a plain perpetuity-style value: the
# ageing factor is exactly zero and a_bar = 1/(alpha+delta) at every age.
flat = GmParams(alpha=0.012, beta=0.0, gamma_exp=0.1)
print(f"\nno senescence: a_bar = {annuity(flat, delta, 65.0):.6f}"
      f" = 1/(alpha+delta) = {1.0 / (flat.alpha + delta):.6f}")

# The closed form keeps working where the intermediate e**z would
# overflow: at very high ages the exp-scaled continued fraction takes over.
print("\nhigh ages stay finite:")
for x in (110.0, 130.0, 150.0):
    print(f"  a_bar({x:.0f}) = {annuity(basis, delta, x):.8f}")
