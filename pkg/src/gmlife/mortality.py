"""The Gompertz-Makeham mortality law.

Force of mortality mu(x) = alpha + beta * e**(gamma_exp * x): a flat
hazard alpha plus a senescent component growing exponentially with age.
The matching survival function is

    l(x) = exp(-alpha*x - (beta/gamma_exp) * (e**(gamma_exp*x) - 1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["GmParams", "survival", "mortality_rate", "cdf"]


@dataclass(frozen=True)
class GmParams:
    """Immutable mortality basis (alpha, beta, gamma_exp), all per year.

    alpha >= 0 and beta >= 0.  gamma_exp must be positive whenever
    beta > 0; with beta = 0 the senescent term vanishes and gamma_exp is
    stored unused, so any finite value is accepted there.
    """

    alpha: float
    beta: float
    gamma_exp: float

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma_exp"):
            v = getattr(self, name)
            if math.isnan(v) or math.isinf(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
        if self.alpha < 0.0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha!r}")
        if self.beta < 0.0:
            raise ValueError(f"beta must be >= 0, got {self.beta!r}")
        if self.beta > 0.0 and self.gamma_exp <= 0.0:
            raise ValueError(
                f"gamma_exp must be > 0 when beta > 0, got {self.gamma_exp!r}"
            )


def _check_age(x: float) -> None:
    if math.isnan(x) or math.isinf(x) or x < 0.0:
        raise ValueError(f"age must be finite and >= 0, got {x!r}")


def survival(params: GmParams, x: float) -> float:
    """Probability l(x) of surviving from age 0 to age x.

    Underflows gracefully to 0.0 at ages extreme enough that the exponent
    drops below about -745.
    """
    _check_age(x)
    if params.beta == 0.0:
        return math.exp(-params.alpha * x)
    # expm1 keeps the senescent exponent accurate for small gamma_exp * x
    return math.exp(
        -params.alpha * x
        - (params.beta / params.gamma_exp) * math.expm1(params.gamma_exp * x)
    )


def mortality_rate(params: GmParams, x: float) -> float:
    """Force of mortality mu(x) = alpha + beta * e**(gamma_exp * x)."""
    _check_age(x)
    if params.beta == 0.0:
        return params.alpha
    return params.alpha + params.beta * math.exp(params.gamma_exp * x)


def cdf(params: GmParams, x: float) -> float:
    """Lifetime distribution function F(x) = 1 - l(x)."""
    return 1.0 - survival(params, x)
