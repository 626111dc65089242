"""Effect measures of the composite endpoint under non-proportional hazards:
geometric average hazard ratio, average hazard ratio, median ratio and
restricted-mean-survival-time ratio, plus the per-arm summary table."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import MedianUndefinedError
from .law import CompositeLaw, TTEDesign, calibrate
from .numerics import QuadratureSpec, find_root, integrate

__all__ = ["ArmSummary", "EffectReport", "gahr", "ahr", "median_time",
           "median_ratio", "rmst", "rmst_ratio", "effectsize_report",
           "format_effect_table"]

_MEDIAN_HORIZON = 100.0  # search medians out to this multiple of the follow-up


def time_integral(g, law: CompositeLaw, quad: QuadratureSpec) -> float:
    """Integral of g over [0, tau], graded towards zero when a shape < 1.

    With a shape below one the composite density behaves like t**(shape-1)
    near zero; substituting t = tau * x**(1/shape_min) makes the transformed
    integrand bounded, so plain Simpson keeps its accuracy.  For shapes >= 1
    the substitution is the identity.
    """
    tau = law.tau
    power = 1.0 / min(1.0, law.beta_min)
    if power == 1.0:
        return integrate(g, 0.0, tau, quad)

    def transformed(x):
        t = tau * x ** power
        return g(t) * power * tau * x ** (power - 1.0)

    return integrate(transformed, 0.0, 1.0, quad)


def gahr(law: CompositeLaw, quad: QuadratureSpec | None = None) -> float:
    """Geometric average hazard ratio up to the follow-up time.

    exp of the mean log hazard ratio weighted by the average event-time
    density of the two arms; the normalizing event probability uses the same
    quadrature grid so that a constant hazard ratio is reproduced exactly.
    """
    quad = quad or law.quad

    def avg_density(t):
        return 0.5 * (law.control.density(t) + law.treated.density(t))

    def weighted_log_ratio(t):
        return np.log(law.treated.hazard(t) / law.control.hazard(t)) * avg_density(t)

    numerator = time_integral(weighted_log_ratio, law, quad)
    denominator = time_integral(avg_density, law, quad)
    return float(np.exp(numerator / denominator))


def ahr(law: CompositeLaw, quad: QuadratureSpec | None = None) -> float:
    """Average hazard ratio up to the follow-up time: the ratio of the two
    arms' relative hazards averaged over the pooled event-time density."""
    quad = quad or law.quad

    def relative(t, treated):
        l0 = law.control.hazard(t)
        l1 = law.treated.hazard(t)
        f_avg = 0.5 * (law.control.density(t) + law.treated.density(t))
        num = l1 if treated else l0
        return num / (l0 + l1) * f_avg

    top = time_integral(lambda t: relative(t, True), law, quad)
    bottom = time_integral(lambda t: relative(t, False), law, quad)
    return float(top / bottom)


def median_time(law: CompositeLaw, treated: bool) -> float:
    """Smallest t with composite survival below one half.

    The model extends analytically beyond the follow-up time; the bracket
    expands geometrically and gives up at 100 times the follow-up.
    """
    arm = law.arm(treated)
    tau = law.tau

    def gap(t):
        return float(arm.survival(t)) - 0.5

    lo = tau * 1e-6
    hi = tau
    while gap(hi) > 0.0:
        hi *= 2.0
        if hi > _MEDIAN_HORIZON * tau:
            raise MedianUndefinedError(
                "composite survival stays above 0.5 within 100 follow-up periods"
            )
    return find_root(gap, lo, hi, tol=1e-12)


def median_ratio(law: CompositeLaw) -> float:
    return median_time(law, True) / median_time(law, False)


def rmst(law: CompositeLaw, treated: bool, quad: QuadratureSpec | None = None) -> float:
    """Restricted mean survival time: area under S* up to the follow-up time.

    The survival curve is bounded at zero, so no lower offset is needed.
    """
    quad = quad or law.quad
    arm = law.arm(treated)
    return time_integral(arm.survival, law, replace(quad, lower_epsilon=0.0))


def rmst_ratio(law: CompositeLaw, quad: QuadratureSpec | None = None) -> float:
    return rmst(law, True, quad) / rmst(law, False, quad)


@dataclass(frozen=True)
class ArmSummary:
    rmst: float
    median: float
    median_beyond_followup: bool
    prob_e1: float
    prob_e2: float
    prob_ce: float


@dataclass(frozen=True)
class EffectReport:
    gahr: float
    ahr: float
    rmst_ratio: float
    median_ratio: float
    control: ArmSummary
    treated: ArmSummary


def _arm_summary(law: CompositeLaw, treated: bool, quad: QuadratureSpec) -> ArmSummary:
    median = median_time(law, treated)
    return ArmSummary(
        rmst=rmst(law, treated, quad),
        median=median,
        median_beyond_followup=median > law.tau,
        prob_e1=law.observed_event_prob(1, treated),
        prob_e2=law.observed_event_prob(2, treated),
        prob_ce=law.prob_composite(treated),
    )


def effectsize_report(
    design: TTEDesign,
    subdivisions: int = 1000,
    law: CompositeLaw | None = None,
) -> EffectReport:
    """All four effect measures plus the per-arm summaries."""
    law = law if law is not None else calibrate(design, subdivisions)
    quad = law.quad
    return EffectReport(
        gahr=gahr(law, quad),
        ahr=ahr(law, quad),
        rmst_ratio=rmst_ratio(law, quad),
        median_ratio=median_ratio(law),
        control=_arm_summary(law, False, quad),
        treated=_arm_summary(law, True, quad),
    )


def format_effect_table(report: EffectReport) -> str:
    """Fixed-width table mirroring the package's printed output."""
    c, t = report.control, report.treated
    rows = [
        ("gAHR", f"{report.gahr:.4f}", "", "", ""),
        ("AHR", f"{report.ahr:.4f}", "", "", ""),
        ("RMST ratio", f"{report.rmst_ratio:.4f}", "RMST", f"{c.rmst:.4f}", f"{t.rmst:.4f}"),
        ("Median ratio", f"{report.median_ratio:.4f}", "Median", f"{c.median:.4f}", f"{t.median:.4f}"),
        ("", "", "Prob. E1", f"{c.prob_e1:.4f}", f"{t.prob_e1:.4f}"),
        ("", "", "Prob. E2", f"{c.prob_e2:.4f}", f"{t.prob_e2:.4f}"),
        ("", "", "Prob. CE", f"{c.prob_ce:.4f}", f"{t.prob_ce:.4f}"),
    ]
    lines = [
        "Effect measure Effect value | Group measure Reference Treated",
        "-------------- ------------ | ------------- --------- -------",
    ]
    for measure, value, group, ref, trt in rows:
        lines.append(f"{measure:<14} {value:<12} | {group:<13} {ref:<9} {trt:<7}")
    note = []
    if c.median_beyond_followup or t.median_beyond_followup:
        note.append("note: a median lies beyond the follow-up time; interpret cautiously")
    return "\n".join(lines + note)
