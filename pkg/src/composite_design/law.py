"""Two-arm joint model of a composite time-to-event endpoint.

The control arm anchors each component's Weibull marginal so that the
probability of *observing* the event by the follow-up time equals the
anticipated value:

* a component whose observation nothing precludes (no fatal competitor, or
  the fatal component itself) is anchored through its marginal law, which has
  a closed-form scale;
* a component that a fatal competitor can preclude is anchored through its
  crude incidence P(T_k <= tau, T_k < T_fatal), and the scale is found by
  root-finding on that integral.

The treated arm applies the proportional-hazards power rule to each marginal
with the same copula and association parameter.  The composite time
T* = min(T1, T2) then has survival C(S1, S2), density by the chain rule, and
a generally time-varying hazard ratio between arms.

Which anticipated probability is a crude incidence depends on the case:

    case 1: neither event is fatal          -> both anchors marginal
    case 2: the second event is fatal       -> first anchor crude
    case 3: the first event is fatal        -> second anchor crude
    case 4: both events are fatal           -> both anchors crude (sum < 1)
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from . import copulas
from .copulas import AssociationSpec, CopulaSpec, cdf, partial_u, partial_v
from .errors import CalibrationError, DomainError, InfeasibleError
from .numerics import QuadratureSpec, find_root, integrate
from .weibull import AnchoredProbability, WeibullMarginal

__all__ = ["TTEDesign", "ArmLaw", "CompositeLaw", "SurvivalCurves", "calibrate"]

_CASES = (1, 2, 3, 4)
# components whose anticipated probability is a crude incidence, per case
_PRECLUDED = {1: (), 2: (1,), 3: (2,), 4: (1, 2)}


@dataclass(frozen=True)
class TTEDesign:
    """Anticipated parameters of a two-arm composite time-to-event design."""

    p0_e1: float
    p0_e2: float
    hr_e1: float
    hr_e2: float
    rho: float
    beta_e1: float = 1.0
    beta_e2: float = 1.0
    case: int = 1
    copula: str = copulas.FRANK
    rho_type: str = "spearman"
    followup_time: float = 1.0

    def __post_init__(self):
        for name in ("p0_e1", "p0_e2"):
            p = getattr(self, name)
            if not 0.0 < p < 1.0:
                raise DomainError(f"{name} must lie strictly in (0, 1)", field=name)
        for name in ("hr_e1", "hr_e2"):
            hr = getattr(self, name)
            if not 0.0 < hr <= 1.0:
                raise DomainError(f"{name} must lie in (0, 1]", field=name)
        for name in ("beta_e1", "beta_e2"):
            if not getattr(self, name) > 0.0:
                raise DomainError(f"{name} must be positive", field=name)
        if self.case not in _CASES:
            raise DomainError("case must be one of 1, 2, 3, 4", field="case")
        object.__setattr__(self, "copula", copulas.canonical_family(self.copula))
        AssociationSpec(self.rho, self.rho_type)  # validates rho and rho_type
        if not self.followup_time > 0.0:
            raise DomainError("followup_time must be positive", field="followup_time")
        if self.case == 4 and self.p0_e1 + self.p0_e2 >= 1.0:
            raise InfeasibleError(
                "with two fatal events the observed probabilities must sum below 1",
                field="p0_e2",
            )

    @property
    def association(self) -> AssociationSpec:
        return AssociationSpec(self.rho, self.rho_type)

    @property
    def precluded(self) -> tuple[int, ...]:
        return _PRECLUDED[self.case]


@dataclass(frozen=True)
class ArmLaw:
    """Law of one arm: two Weibull marginals bound by a copula."""

    copula: CopulaSpec
    e1: WeibullMarginal
    e2: WeibullMarginal

    def marginal(self, k: int) -> WeibullMarginal:
        return self.e1 if k == 1 else self.e2

    def survival(self, t):
        """S*(t) = C(S1(t), S2(t)), defined for all t >= 0."""
        return cdf(self.copula, self.e1.survival(t), self.e2.survival(t))

    def density(self, t):
        s1 = self.e1.survival(t)
        s2 = self.e2.survival(t)
        return partial_u(self.copula, s1, s2) * self.e1.density(t) + partial_v(
            self.copula, s1, s2
        ) * self.e2.density(t)

    def hazard(self, t):
        return self.density(t) / self.survival(t)

    def crude_incidence(self, k: int, t_end: float, quad: QuadratureSpec) -> float:
        """P(T_k <= t_end, T_k < T_other).

        Integrated on the probability scale of component k (u = F_k(t)), which
        keeps the integrand bounded even for shapes below one; the additional
        quadratic grading u = upper * x^2 clusters nodes at the short-time
        corner, where the integrand loses smoothness whenever the competitor's
        shape exceeds this component's (and for the Gumbel family generally).
        """
        own = self.marginal(k)
        other = self.marginal(3 - k)
        upper = float(own.event_prob(t_end))
        part = partial_u if k == 1 else partial_v

        def integrand(x):
            u = upper * x ** 2
            t = own.time_from_survival(np.clip(1.0 - u, 1e-300, 1.0))
            s_own = 1.0 - u
            s_other = other.survival(t)
            conditional = (
                part(self.copula, s_own, s_other)
                if k == 1
                else part(self.copula, s_other, s_own)
            )
            return conditional * 2.0 * upper * x

        return integrate(integrand, 0.0, 1.0, replace(quad, lower_epsilon=0.0))


@dataclass(frozen=True)
class SurvivalCurves:
    """Tabulated component and composite survival for both arms."""

    time: np.ndarray
    control_e1: np.ndarray
    control_e2: np.ndarray
    control_ce: np.ndarray
    treated_e1: np.ndarray
    treated_e2: np.ndarray
    treated_ce: np.ndarray

    def columns(self) -> dict:
        return {
            "time": self.time,
            "control_e1": self.control_e1,
            "control_e2": self.control_e2,
            "control_ce": self.control_ce,
            "treated_e1": self.treated_e1,
            "treated_e2": self.treated_e2,
            "treated_ce": self.treated_ce,
        }


@dataclass(frozen=True)
class CompositeLaw:
    """Calibrated two-arm law of the composite endpoint."""

    design: TTEDesign
    copula: CopulaSpec
    control: ArmLaw
    treated: ArmLaw
    quad: QuadratureSpec = field(default_factory=QuadratureSpec)

    @property
    def tau(self) -> float:
        return self.design.followup_time

    @property
    def beta_min(self) -> float:
        return min(self.design.beta_e1, self.design.beta_e2)

    def arm(self, treated: bool) -> ArmLaw:
        return self.treated if treated else self.control

    def hr_star(self, t):
        """Composite hazard ratio treated / control at time t (> 0).

        Times below the quadrature offset are evaluated at the offset point.
        """
        t = np.asarray(t, dtype=float)
        if np.any(t <= 0.0):
            raise DomainError("hr_star requires t > 0", field="t")
        t = np.maximum(t, self.quad.lower_epsilon * self.tau)
        out = self.treated.hazard(t) / self.control.hazard(t)
        return out if out.shape else float(out)

    def prob_composite(self, treated: bool = False) -> float:
        return float(1.0 - self.arm(treated).survival(self.tau))

    def observed_event_prob(self, k: int, treated: bool = False) -> float:
        """Probability of observing component k's event by the follow-up time.

        Control-arm values reproduce the anchors.  In the treated arm the
        fatal component (and any component without a fatal competitor) is the
        marginal probability; the probability for a precluded component is
        recovered from the composite and the fatal component's marginals,
        which reproduces the published worked-example values.
        """
        design = self.design
        if k not in (1, 2):
            raise DomainError("component index must be 1 or 2", field="k")
        if not treated:
            return design.p0_e1 if k == 1 else design.p0_e2
        if k not in design.precluded:
            return float(self.treated.marginal(k).event_prob(self.tau))
        if design.case == 4:
            return self.treated.crude_incidence(k, self.tau, self.quad)
        fatal = 3 - k
        p_fatal_treated = float(self.treated.marginal(fatal).event_prob(self.tau))
        p_fatal_control = design.p0_e1 if fatal == 1 else design.p0_e2
        return self.prob_composite(treated=True) - p_fatal_treated * (1.0 - p_fatal_control)

    def survival_curves(self, grid_size: int = 100) -> SurvivalCurves:
        if grid_size < 2:
            raise DomainError("grid size must be at least 2", field="grid")
        t = np.linspace(0.0, self.tau, grid_size)
        return SurvivalCurves(
            time=t,
            control_e1=self.control.e1.survival(t),
            control_e2=self.control.e2.survival(t),
            control_ce=np.asarray(self.control.survival(t)),
            treated_e1=self.treated.e1.survival(t),
            treated_e2=self.treated.e2.survival(t),
            treated_ce=np.asarray(self.treated.survival(t)),
        )


def _crude_given_scales(
    cop: CopulaSpec,
    k: int,
    scale_k: float,
    other: WeibullMarginal,
    shape_k: float,
    tau: float,
    quad: QuadratureSpec,
) -> float:
    own = WeibullMarginal(shape_k, scale_k)
    arm = ArmLaw(cop, own, other) if k == 1 else ArmLaw(cop, other, own)
    return arm.crude_incidence(k, tau, quad)


def _solve_crude_scale(
    cop: CopulaSpec,
    k: int,
    target: float,
    other: WeibullMarginal,
    shape_k: float,
    tau: float,
    quad: QuadratureSpec,
) -> float:
    """Scale whose crude incidence by tau equals the anchor probability.

    The crude incidence is monotone decreasing in the scale, and is bounded by
    the marginal probability, so the root lies below the marginal-anchored
    scale; the bracket spans a factor of 50 on each side of it.
    """
    marginal_scale = WeibullMarginal.from_anchor(
        AnchoredProbability(target, tau), shape_k
    ).scale

    def gap(scale):
        return _crude_given_scales(cop, k, scale, other, shape_k, tau, quad) - target

    lo, hi = marginal_scale / 50.0, marginal_scale * 50.0
    if gap(lo) < 0.0 or gap(hi) > 0.0:
        raise CalibrationError(
            f"no marginal scale reproduces the crude incidence {target} for component {k}",
            field=f"p0_e{k}",
        )
    return find_root(gap, lo, hi, tol=1e-12)


def calibrate(design: TTEDesign, subdivisions: int = 1000) -> CompositeLaw:
    """Calibrate both arms of the joint model for a design."""
    quad = QuadratureSpec(subdivisions, 1e-6)
    cop = copulas.theta_from_association(design.association, design.copula)
    tau = design.followup_time
    anchors = {1: design.p0_e1, 2: design.p0_e2}
    shapes = {1: design.beta_e1, 2: design.beta_e2}
    hrs = {1: design.hr_e1, 2: design.hr_e2}

    marginals = {
        k: WeibullMarginal.from_anchor(AnchoredProbability(anchors[k], tau), shapes[k])
        for k in (1, 2)
    }
    precluded = design.precluded
    if len(precluded) == 1:
        k = precluded[0]
        other = marginals[3 - k]
        scale = _solve_crude_scale(cop, k, anchors[k], other, shapes[k], tau, quad)
        marginals[k] = WeibullMarginal(shapes[k], scale)
    elif len(precluded) == 2:
        # both anchors are crude incidences: alternate one-dimensional solves,
        # which converges because each crude incidence is monotone in each scale
        for _ in range(100):
            previous = (marginals[1].scale, marginals[2].scale)
            for k in (1, 2):
                scale = _solve_crude_scale(
                    cop, k, anchors[k], marginals[3 - k], shapes[k], tau, quad
                )
                marginals[k] = WeibullMarginal(shapes[k], scale)
            drift = max(
                abs(marginals[1].scale - previous[0]) / previous[0],
                abs(marginals[2].scale - previous[1]) / previous[1],
            )
            if drift < 1e-11:
                break
        else:
            raise CalibrationError("case-4 calibration did not converge")

    control = ArmLaw(cop, marginals[1], marginals[2])
    treated = ArmLaw(cop, marginals[1].power_rule(hrs[1]), marginals[2].power_rule(hrs[2]))
    return CompositeLaw(design=design, copula=cop, control=control, treated=treated, quad=quad)
