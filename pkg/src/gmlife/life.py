"""Closed-form life-contingency values under Gompertz-Makeham mortality.

The whole module rests on one identity: the present value of a continuous
life annuity at force of interest delta is

    a_bar(x) = e0(alpha + delta, beta * e**(gamma_exp * x), gamma_exp)

where e0 is the expected lifetime from age 0, which in turn has the
closed form (writing a for the first basis parameter and z = beta/gamma)

    e0(a, beta, gamma) = (1/a) * (1 - z**(a/gamma) * e**z * Gamma(1 - a/gamma, z))

with Gamma(.,.) the upper incomplete gamma function.  Discounting is a
shift of the flat hazard, and ageing by x years is a rescaling of beta,
so every quantity here (life expectancy, annuity value, commutation
functions) is a single gamma-function evaluation away.  No numerical
integration is performed anywhere in this module.

The product e**z * Gamma(eta, z) is evaluated by
:func:`gmlife.special.exp_scaled_upper_inc_gamma` and powers are taken in
log space, so values stay finite at ages where e**z itself would
overflow.  Shapes 1 - a/gamma down to -10 are supported, covering bases
where the combined hazard-plus-interest exceeds the ageing rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .mortality import GmParams, _check_age, survival
from .special import exp_scaled_upper_inc_gamma

__all__ = [
    "CommutationRow",
    "e0",
    "remaining_life",
    "annuity",
    "ageing_factor",
    "commutation_d",
    "commutation_n",
    "commutation_m",
    "commutation_row",
    "positive_shape_check",
]


@dataclass(frozen=True)
class CommutationRow:
    """One table row: age x with D(x), N(x) and M(x) at a single rate."""

    x: float
    d_val: float
    n_val: float
    m_val: float


def _check_rate(delta: float) -> None:
    if math.isnan(delta) or math.isinf(delta) or delta < 0.0:
        raise ValueError(f"interest rate must be finite and >= 0, got {delta!r}")


def _e0_core(a: float, beta: float, gam: float) -> float:
    # Expected lifetime at combined flat hazard a = alpha + delta.
    if beta == 0.0:
        if a == 0.0:
            raise ValueError("alpha, beta and delta are all zero: value is infinite")
        return 1.0 / a
    z = beta / gam
    if a == 0.0:
        # pure Gompertz limit: e0 = e**z * E1(z) / gamma
        return exp_scaled_upper_inc_gamma(0.0, z) / gam
    ratio = a / gam
    xi = math.exp(ratio * math.log(z)) * exp_scaled_upper_inc_gamma(1.0 - ratio, z)
    # rounding can push xi a hair past 1 once z is astronomically large;
    # the true value is always positive
    return max((1.0 - xi) / a, 0.0)


def e0(params: GmParams) -> float:
    """Expected lifetime from age 0; requires alpha + beta > 0."""
    return _e0_core(params.alpha, params.beta, params.gamma_exp)


def annuity(params: GmParams, delta: float, x: float) -> float:
    """Present value a_bar(x) of a continuous whole-life annuity of rate 1.

    Computed as e0 at the discount-shifted, age-shifted basis
    (alpha + delta, beta * e**(gamma_exp * x), gamma_exp).  Raises
    OverflowError when beta * e**(gamma_exp * x) is not representable.
    """
    _check_rate(delta)
    _check_age(x)
    a = params.alpha + delta
    if params.beta == 0.0:
        beta_x = 0.0
    else:
        beta_x = params.beta * math.exp(params.gamma_exp * x)
    return _e0_core(a, beta_x, params.gamma_exp)


def remaining_life(params: GmParams, x: float) -> float:
    """Expected remaining lifetime e_x; the undiscounted annuity value."""
    return annuity(params, 0.0, x)


def ageing_factor(params: GmParams, delta: float, x: float) -> float:
    """The ageing drag on the annuity: a_bar(x) = (1 - factor) / (alpha + delta).

    Zero for beta = 0 (no senescence), approaching 1 as survival vanishes.
    Undefined when alpha + delta = 0, since the defining relation
    degenerates there.
    """
    _check_rate(delta)
    _check_age(x)
    a = params.alpha + delta
    if a == 0.0:
        raise ValueError("ageing factor is undefined when alpha + delta = 0")
    if params.beta == 0.0:
        return 0.0
    beta_x = params.beta * math.exp(params.gamma_exp * x)
    gam = params.gamma_exp
    z = beta_x / gam
    ratio = a / gam
    xi = math.exp(ratio * math.log(z)) * exp_scaled_upper_inc_gamma(1.0 - ratio, z)
    return min(max(xi, 0.0), 1.0)


def commutation_d(params: GmParams, delta: float, x: float) -> float:
    """D(x) = l(x) * e**(-delta*x), i.e. survival at the rate-shifted basis."""
    _check_rate(delta)
    shifted = GmParams(params.alpha + delta, params.beta, params.gamma_exp)
    return survival(shifted, x)


def commutation_n(params: GmParams, delta: float, x: float) -> float:
    """N(x) = integral of D over [x, inf) = D(x) * a_bar(x)."""
    return commutation_d(params, delta, x) * annuity(params, delta, x)


def commutation_m(params: GmParams, delta: float, x: float) -> float:
    """M(x) = integral of mu*D over [x, inf) = D(x) - delta * N(x)."""
    d = commutation_d(params, delta, x)
    n = d * annuity(params, delta, x)
    return d - delta * n


def commutation_row(
    params: GmParams, delta: float, x: float, double_rate: bool = False
) -> CommutationRow:
    """All three commutation values at age x, at rate delta or 2*delta.

    Rows at twice the rate feed variance (second-moment) calculations for
    insurance contracts priced off the single-rate columns.
    """
    _check_rate(delta)
    rate = 2.0 * delta if double_rate else delta
    d = commutation_d(params, rate, x)
    n = d * annuity(params, rate, x)
    m = d - rate * n
    return CommutationRow(x=x, d_val=d, n_val=n, m_val=m)


def positive_shape_check(params: GmParams, delta: float) -> float:
    """Shape parameter 1 - (alpha + delta)/gamma_exp of the gamma-function route.

    Positive for typical bases; a non-positive value means annuity
    evaluation runs through the negative-shape recurrence (or the
    exponential-integral path at exactly zero) instead of the gamma CDF.
    """
    _check_rate(delta)
    if params.gamma_exp <= 0.0:
        raise ValueError("shape is only defined for gamma_exp > 0")
    return 1.0 - (params.alpha + delta) / params.gamma_exp
