"""Archimedean copulas (Frank, Gumbel, Clayton) plus the independence copula:
evaluation, conditional distributions, association inversion and sampling.

Conventions
-----------
* The joint law of two event times is built on the survival scale:
  P(T1 > t1, T2 > t2) = C(S1(t1), S2(t2)).
* Association is anticipated as either Spearman's rho or Kendall's tau and is
  inverted to the copula parameter theta numerically (double Simpson for the
  Spearman integral, a Debye-type single integral for Frank's tau); Clayton
  and Gumbel have closed-form tau inversions.
* A zero association maps to the explicit independence family rather than a
  limiting theta, because Frank is singular at theta = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InfeasibleError
from .numerics import QuadratureSpec, find_root, integrate

__all__ = [
    "FRANK",
    "GUMBEL",
    "CLAYTON",
    "INDEPENDENCE",
    "CopulaSpec",
    "AssociationSpec",
    "cdf",
    "partial_u",
    "partial_v",
    "kendall_tau",
    "spearman_rho",
    "theta_from_association",
    "sample",
]

FRANK = "frank"
GUMBEL = "gumbel"
CLAYTON = "clayton"
INDEPENDENCE = "independence"
FAMILIES = (FRANK, GUMBEL, CLAYTON, INDEPENDENCE)

_TINY = 1e-15


def canonical_family(name: str) -> str:
    fam = name.strip().lower()
    if fam not in FAMILIES:
        raise DomainError(f"unknown copula family {name!r}; choose from {FAMILIES}", field="copula")
    return fam


@dataclass(frozen=True)
class CopulaSpec:
    family: str
    theta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "family", canonical_family(self.family))
        if self.family == FRANK and self.theta == 0.0:
            raise DomainError("Frank copula requires theta != 0 (use independence)", field="theta")
        if self.family == GUMBEL and self.theta < 1.0:
            raise DomainError("Gumbel copula requires theta >= 1", field="theta")
        if self.family == CLAYTON and self.theta <= 0.0:
            raise DomainError("Clayton copula requires theta > 0", field="theta")


@dataclass(frozen=True)
class AssociationSpec:
    """Anticipated rank association between the component times."""

    value: float
    kind: str = "spearman"

    def __post_init__(self):
        kind = self.kind.strip().lower()
        if kind not in ("spearman", "kendall"):
            raise DomainError("association kind must be 'spearman' or 'kendall'", field="rho_type")
        object.__setattr__(self, "kind", kind)
        if not 0.0 <= self.value < 1.0:
            raise DomainError("association must lie in [0, 1)", field="rho")


def _check_unit(u, v):
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if np.any((u < 0) | (u > 1)) or np.any((v < 0) | (v > 1)):
        raise DomainError("copula arguments must lie in [0, 1]")
    return u, v


def cdf(spec: CopulaSpec, u, v):
    """C(u, v); boundary identities C(u,1)=u, C(1,v)=v, C(u,0)=C(0,v)=0 hold exactly."""
    u, v = _check_unit(u, v)
    th = spec.theta
    uc = np.clip(u, _TINY, 1.0 - _TINY)
    vc = np.clip(v, _TINY, 1.0 - _TINY)
    if spec.family == INDEPENDENCE:
        out = u * v
        return out if out.shape else float(out)
    if spec.family == FRANK:
        ratio = np.expm1(-th * uc) * np.expm1(-th * vc) / np.expm1(-th)
        core = -np.log1p(np.maximum(ratio, -1.0 + _TINY)) / th
    elif spec.family == GUMBEL:
        core = np.exp(-(((-np.log(uc)) ** th + (-np.log(vc)) ** th) ** (1.0 / th)))
    else:  # clayton
        core = (uc ** (-th) + vc ** (-th) - 1.0) ** (-1.0 / th)
    out = np.where(u == 1.0, v, np.where(v == 1.0, u, core))
    out = np.where((u == 0.0) | (v == 0.0), 0.0, out)
    return out if out.shape else float(out)


def _partial_core(spec: CopulaSpec, u, v):
    """dC/du on the open square (arguments pre-clipped)."""
    th = spec.theta
    if spec.family == INDEPENDENCE:
        return v
    if spec.family == FRANK:
        return np.exp(-th * u) * np.expm1(-th * v) / (
            np.expm1(-th) + np.expm1(-th * u) * np.expm1(-th * v)
        )
    if spec.family == GUMBEL:
        x = -np.log(u)
        y = -np.log(v)
        s = (x ** th + y ** th) ** (1.0 / th)
        return np.exp(-s) * s ** (1.0 - th) * x ** (th - 1.0) / u
    # clayton
    return u ** (-th - 1.0) * (u ** (-th) + v ** (-th) - 1.0) ** (-1.0 / th - 1.0)


def partial_u(spec: CopulaSpec, u, v):
    """dC/du, the conditional distribution of V given U = u.

    Boundary arguments in v return the limit values 0 and 1.
    """
    u, v = _check_unit(u, v)
    uc = np.clip(u, _TINY, 1.0 - _TINY)
    vc = np.clip(v, _TINY, 1.0 - _TINY)
    core = _partial_core(spec, uc, vc)
    out = np.where(v == 0.0, 0.0, np.where(v == 1.0, 1.0, core))
    return out if out.shape else float(out)


def partial_v(spec: CopulaSpec, u, v):
    """dC/dv; every implemented family is exchangeable, so swap arguments."""
    return partial_u(spec, v, u)


# -- association measures -----------------------------------------------------

_SP_NODES = 257  # Simpson panels per axis for the Spearman double integral


def spearman_rho(spec: CopulaSpec) -> float:
    """rho_S = 12 * double-integral of C over the unit square - 3."""
    if spec.family == INDEPENDENCE:
        return 0.0
    x = np.linspace(0.0, 1.0, _SP_NODES)
    w = np.ones(_SP_NODES)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    w *= (1.0 / (_SP_NODES - 1)) / 3.0
    grid = cdf(spec, x[:, None], x[None, :])
    return float(12.0 * w @ grid @ w - 3.0)


def kendall_tau(spec: CopulaSpec, quad: QuadratureSpec | None = None) -> float:
    """Kendall's tau; closed forms for Clayton/Gumbel, Debye integral for Frank."""
    if spec.family == INDEPENDENCE:
        return 0.0
    th = spec.theta
    if spec.family == CLAYTON:
        return th / (th + 2.0)
    if spec.family == GUMBEL:
        return 1.0 - 1.0 / th
    quad = quad or QuadratureSpec(1000, 1e-9)
    debye = integrate(lambda t: t / np.expm1(t), 0.0, th, quad) / th
    return 1.0 - 4.0 / th * (1.0 - debye)


_THETA_HI = {FRANK: 350.0, GUMBEL: 150.0, CLAYTON: 300.0}
_THETA_LO = {FRANK: 1e-5, GUMBEL: 1.0 + 1e-9, CLAYTON: 1e-9}


def theta_from_association(assoc: AssociationSpec, family: str) -> CopulaSpec:
    """Copula whose association measure equals the anticipated value.

    Zero association returns the independence family for any requested family.
    """
    family = canonical_family(family)
    if assoc.value == 0.0 or family == INDEPENDENCE:
        if assoc.value != 0.0:
            raise InfeasibleError("independence copula cannot carry nonzero association", field="rho")
        return CopulaSpec(INDEPENDENCE)
    if assoc.kind == "kendall":
        tau = assoc.value
        if family == CLAYTON:
            return CopulaSpec(CLAYTON, 2.0 * tau / (1.0 - tau))
        if family == GUMBEL:
            return CopulaSpec(GUMBEL, 1.0 / (1.0 - tau))
        measure = lambda th: kendall_tau(CopulaSpec(FRANK, th))
    else:
        measure = lambda th: spearman_rho(CopulaSpec(family, th))
    lo, hi = _THETA_LO[family], 2.0
    while measure(hi) < assoc.value:
        hi *= 2.0
        if hi > _THETA_HI[family]:
            raise InfeasibleError(
                f"no {family} parameter reaches {assoc.kind}={assoc.value}", field="rho"
            )
    theta = find_root(lambda th: measure(th) - assoc.value, lo, hi, tol=1e-9)
    return CopulaSpec(family, theta)


# -- sampling ------------------------------------------------------------------


def _conditional_v(spec: CopulaSpec, u, w):
    """Solve dC/du(u, v) = w for v; closed forms except Gumbel (bisection)."""
    th = spec.theta
    if spec.family == INDEPENDENCE:
        return w
    if spec.family == FRANK:
        ev = w * np.expm1(-th) / (np.exp(-th * u) * (1.0 - w) + w)
        return -np.log1p(ev) / th
    if spec.family == CLAYTON:
        return (1.0 + u ** (-th) * (w ** (-th / (1.0 + th)) - 1.0)) ** (-1.0 / th)
    # Gumbel: dC/du is increasing in v, bisect on the open interval
    lo = np.full_like(u, _TINY)
    hi = np.full_like(u, 1.0 - _TINY)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        below = _partial_core(spec, u, mid) < w
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def sample(spec: CopulaSpec, n: int, seed) -> tuple[np.ndarray, np.ndarray]:
    """n pairs (u, v) with uniform marginals and dependence C, by conditional
    inversion; deterministic for a given seed."""
    if n < 1:
        raise DomainError("sample size must be at least 1", field="n")
    rng = np.random.default_rng(seed)
    u = np.clip(rng.random(n), _TINY, 1.0 - _TINY)
    w = np.clip(rng.random(n), _TINY, 1.0 - _TINY)
    v = np.clip(_conditional_v(spec, u, w), _TINY, 1.0 - _TINY)
    return u, v
