"""Shared numerical kernels: definite integration, bracketed root-finding and
standard-normal quantiles.

Everything downstream (copula calibration, effect measures, sample sizes)
funnels through these three primitives, so they are deliberately boring:
composite Simpson on a uniform grid, a safeguarded secant/bisection hybrid,
and a rational normal-quantile approximation polished by one Newton step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BracketingError, DomainError, IntegrationError

__all__ = [
    "QuadratureSpec",
    "DEFAULT_QUAD",
    "integrate",
    "find_root",
    "normal_quantile",
    "normal_cdf",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Grid resolution plus a relative offset of the lower limit.

    `lower_epsilon` shifts the lower limit by that fraction of the interval,
    which keeps integrands finite when a Weibull hazard with shape < 1
    diverges at t = 0.
    """

    subdivisions: int = 1000
    lower_epsilon: float = 1e-6

    def __post_init__(self):
        if self.subdivisions < 16:
            raise DomainError("subdivisions must be at least 16", field="subdivisions")
        if not 0.0 <= self.lower_epsilon < 0.01:
            raise DomainError("lower_epsilon must lie in [0, 0.01)", field="lower_epsilon")


DEFAULT_QUAD = QuadratureSpec()


def integrate(f: Callable, a: float, b: float, spec: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Composite Simpson approximation of the integral of `f` over [a, b].

    `f` must accept a numpy array of abscissae and return the matching array
    of values; the lower limit is offset by `spec.lower_epsilon * (b - a)`.
    """
    if not b > a:
        raise DomainError("integration requires a < b")
    lo = a + spec.lower_epsilon * (b - a)
    panels = _even_panels(spec.subdivisions)
    x = np.linspace(lo, b, panels + 1)
    y = np.asarray(f(x), dtype=float)
    if y.shape != x.shape:
        raise DomainError("integrand must be vectorized over its abscissae")
    bad = ~np.isfinite(y)
    if bad.any():
        where = x[bad][0]
        raise IntegrationError(f"non-finite integrand value at t={where!r}")
    h = (b - lo) / panels
    weights = np.ones(panels + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return float(h / 3.0 * np.dot(weights, y))


def _even_panels(n: int) -> int:
    """Simpson needs an even panel count; round odd counts up."""
    return n if n % 2 == 0 else n + 1


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    max_iter: int = 200,
) -> float:
    """Root of `f` in [lo, hi] by a safeguarded secant/bisection hybrid.

    Stops when |f(x)| <= tol or the bracket collapses to floating-point
    resolution.  The bracket must straddle a sign change.
    """
    if tol <= 0:
        raise DomainError("tol must be positive", field="tol")
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise BracketingError(f"no sign change on [{lo}, {hi}]: f={flo:.3g}, {fhi:.3g}")
    a, b, fa, fb = lo, hi, flo, fhi
    x, fx = a, fa
    for _ in range(max_iter):
        # secant proposal, falling back to bisection when it leaves the bracket
        if fb != fa:
            x = b - fb * (b - a) / (fb - fa)
        if not a < x < b:
            x = 0.5 * (a + b)
        fx = f(x)
        if abs(fx) <= tol:
            return x
        if fa * fx < 0:
            b, fb = x, fx
        else:
            a, fa = x, fx
        if b - a <= 4.0 * np.finfo(float).eps * max(1.0, abs(a), abs(b)):
            return 0.5 * (a + b)
    return x


# Acklam's rational approximation to the inverse normal CDF, good to ~1.2e-9
# before refinement.
_A = (-3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02,
      1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00)
_B = (-5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02,
      6.680131188771972e01, -1.328068155288572e01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00,
      -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00,
      3.754408661907416e00)
_P_LOW = 0.02425


def normal_cdf(z: float) -> float:
    """Standard normal distribution function."""
    return 0.5 * math.erfc(-z / math.sqrt(2.0))


def normal_quantile(p: float) -> float:
    """Standard normal quantile, |error| below 1e-9 on (0, 1)."""
    if not 0.0 < p < 1.0:
        raise DomainError("normal_quantile requires 0 < p < 1", field="p")
    if p > 0.5:
        # 1 - p is exact for p >= 0.5, and the lower tail keeps the Newton
        # correction well conditioned; symmetry then holds by construction
        return -_lower_half_quantile(1.0 - p)
    return _lower_half_quantile(p)


def _lower_half_quantile(p: float) -> float:
    if p < _P_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        z = (((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]) / \
            ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0)
    else:
        q = p - 0.5
        r = q * q
        z = (((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q / \
            (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0)
    # one Newton step on the CDF pushes the error to machine level
    density = math.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi)
    z -= (normal_cdf(z) - p) / density
    return z
