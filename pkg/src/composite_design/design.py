"""Sample-size and expected-event calculations (Schoenfeld or Freedman) and
the asymptotic-relative-efficiency criterion for endpoint selection."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .effects import gahr, time_integral
from .errors import DomainError, InfeasibleError
from .law import CompositeLaw, TTEDesign, calibrate
from .numerics import normal_quantile

__all__ = [
    "SCHOENFELD",
    "FREEDMAN",
    "SampleSizeReport",
    "AREReport",
    "SensitivityTable",
    "events_required",
    "samplesize_tte",
    "are_tte",
    "sensitivity_curves",
    "format_samplesize_table",
]

SCHOENFELD = "schoenfeld"
FREEDMAN = "freedman"


def _canonical_formula(formula: str) -> str:
    name = formula.strip().lower()
    if name not in (SCHOENFELD, FREEDMAN):
        raise DomainError("ss_formula must be 'schoenfeld' or 'freedman'", field="ss_formula")
    return name


def _check_error_rates(alpha: float, power: float):
    if not 0.0 < alpha < 1.0:
        raise DomainError("alpha must lie in (0, 1)", field="alpha")
    if not 0.0 < power < 1.0:
        raise DomainError("power must lie in (0, 1)", field="power")


def events_required(
    effect: float,
    alpha: float = 0.05,
    power: float = 0.80,
    formula: str = SCHOENFELD,
) -> float:
    """Required number of events for a two-sided level-alpha logrank test."""
    formula = _canonical_formula(formula)
    _check_error_rates(alpha, power)
    if effect <= 0.0:
        raise DomainError("effect must be positive", field="effect")
    if effect == 1.0:
        raise InfeasibleError("an effect of exactly 1 is undetectable", field="effect")
    z = normal_quantile(1.0 - alpha / 2.0) + normal_quantile(power)
    if formula == SCHOENFELD:
        return 4.0 * z ** 2 / math.log(effect) ** 2
    return z ** 2 * ((1.0 + effect) / (1.0 - effect)) ** 2


def _total_n(events: float, prob_avg: float) -> int:
    """Total across both arms, rounded up to an even integer for balance."""
    return 2 * math.ceil(events / (2.0 * prob_avg))


@dataclass(frozen=True)
class SampleSizeReport:
    n_endpoint1: int
    n_endpoint2: int
    n_composite: int
    events_composite: float
    gahr: float
    prob_avg_composite: float
    alpha: float
    power: float
    formula: str


def samplesize_tte(
    design: TTEDesign,
    alpha: float = 0.05,
    power: float = 0.80,
    formula: str = SCHOENFELD,
    subdivisions: int = 1000,
    law: CompositeLaw | None = None,
) -> SampleSizeReport:
    """Total sample sizes for designs using either single component or the
    composite as primary endpoint.

    Single-component rows use the anticipated hazard ratio and the average of
    that component's observation probabilities over the two arms; the
    composite row uses the geometric average hazard ratio and the average
    composite event probability.
    """
    formula = _canonical_formula(formula)
    law = law if law is not None else calibrate(design, subdivisions)
    hrs = {1: design.hr_e1, 2: design.hr_e2}
    n_single = {}
    for k in (1, 2):
        p_avg = 0.5 * (law.observed_event_prob(k, False) + law.observed_event_prob(k, True))
        n_single[k] = _total_n(events_required(hrs[k], alpha, power, formula), p_avg)
    g = gahr(law)
    p_star_avg = 0.5 * (law.prob_composite(False) + law.prob_composite(True))
    events = events_required(g, alpha, power, formula)
    return SampleSizeReport(
        n_endpoint1=n_single[1],
        n_endpoint2=n_single[2],
        n_composite=_total_n(events, p_star_avg),
        events_composite=events,
        gahr=g,
        prob_avg_composite=p_star_avg,
        alpha=alpha,
        power=power,
        formula=formula,
    )


@dataclass(frozen=True)
class AREReport:
    """Squared ratio of the logrank noncentrality parameters (composite over
    relevant endpoint); values above one favor the composite."""

    are: float
    noncentrality_relevant: float
    noncentrality_composite: float


def are_tte(
    design: TTEDesign,
    subdivisions: int = 1000,
) -> AREReport:
    """Asymptotic relative efficiency of testing the composite versus the
    first (relevant) component, on follow-up-normalized time."""
    if design.hr_e1 == 1.0:
        raise InfeasibleError(
            "ARE is undefined when the relevant endpoint carries no effect", field="hr_e1"
        )
    law = calibrate(replace(design, followup_time=1.0), subdivisions)
    quad = law.quad

    def weighted_log_ratio(t):
        return np.log(law.treated.hazard(t) / law.control.hazard(t)) * law.control.density(t)

    numerator = time_integral(weighted_log_ratio, law, quad)
    p_star = time_integral(law.control.density, law, quad)
    p_relevant = float(law.control.e1.event_prob(1.0))
    mu_composite = numerator / math.sqrt(p_star)
    mu_relevant = math.log(design.hr_e1) * math.sqrt(p_relevant)
    return AREReport(
        are=(mu_composite / mu_relevant) ** 2,
        noncentrality_relevant=mu_relevant,
        noncentrality_composite=mu_composite,
    )


@dataclass(frozen=True)
class SensitivityTable:
    """ARE and composite sample size across a grid of association values."""

    rho: np.ndarray
    are: np.ndarray
    n_composite: np.ndarray

    def rows(self):
        return list(zip(self.rho.tolist(), self.are.tolist(), self.n_composite.tolist()))

    def to_csv(self) -> str:
        lines = ["rho,are,n_composite"]
        for rho, are, n in self.rows():
            lines.append(f"{rho:.10g},{are:.10g},{int(n)}")
        return "\n".join(lines) + "\n"


def sensitivity_curves(
    design: TTEDesign,
    alpha: float = 0.05,
    power: float = 0.80,
    formula: str = SCHOENFELD,
    rho_grid=None,
    subdivisions: int = 1000,
) -> SensitivityTable:
    """Recalibrate the design across association values; used for the
    ARE-versus-rho and sample-size-versus-rho panels."""
    if rho_grid is None:
        rho_grid = np.arange(0.0, 0.91, 0.1)
    rho_grid = np.asarray(sorted(float(r) for r in rho_grid))
    if rho_grid.size == 0 or np.any((rho_grid < 0.0) | (rho_grid >= 1.0)):
        raise DomainError("rho grid values must lie in [0, 1)", field="rho_grid")
    ares = []
    sizes = []
    for rho in rho_grid:
        at_rho = replace(design, rho=float(rho))
        ares.append(are_tte(at_rho, subdivisions).are)
        sizes.append(
            samplesize_tte(at_rho, alpha, power, formula, subdivisions).n_composite
        )
    return SensitivityTable(
        rho=rho_grid, are=np.asarray(ares), n_composite=np.asarray(sizes, dtype=int)
    )


def format_samplesize_table(report: SampleSizeReport) -> str:
    rows = [
        ("Endpoint 1", report.n_endpoint1),
        ("Endpoint 2", report.n_endpoint2),
        ("Composite endpoint", report.n_composite),
    ]
    lines = [
        "Endpoint           Total sample size",
        "--------           -----------------",
    ]
    for name, n in rows:
        lines.append(f"{name:<18} {n}")
    return "\n".join(lines)
