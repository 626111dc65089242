"""Design calculations for binary composite endpoints: union probability from
the component rates and their Pearson correlation, correlation feasibility
bounds, effect-size conversion across difference / relative risk / odds
ratio, sample size with pooled or unpooled variance, and the binary ARE."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InfeasibleError
from .numerics import normal_quantile

__all__ = [
    "EFFECT_MEASURES",
    "BinaryDesign",
    "BinaryEffectReport",
    "BinarySampleSize",
    "prob_cbe",
    "lower_corr",
    "upper_corr",
    "treated_prob",
    "effectsize_cbe",
    "samplesize_cbe",
    "are_cbe",
]

EFFECT_MEASURES = ("diff", "rr", "or")


def _check_prob(p: float, name: str):
    if not 0.0 < p < 1.0:
        raise DomainError(f"{name} must lie strictly in (0, 1)", field=name)


def _check_measure(measure: str, name: str) -> str:
    m = measure.strip().lower()
    if m not in EFFECT_MEASURES:
        raise DomainError(f"{name} must be one of {EFFECT_MEASURES}", field=name)
    return m


def lower_corr(p1: float, p2: float) -> float:
    """Smallest Pearson correlation compatible with the two Bernoulli rates."""
    _check_prob(p1, "p1")
    _check_prob(p2, "p2")
    denom = math.sqrt(p1 * (1 - p1) * p2 * (1 - p2))
    return (max(0.0, p1 + p2 - 1.0) - p1 * p2) / denom


def upper_corr(p1: float, p2: float) -> float:
    """Largest Pearson correlation compatible with the two Bernoulli rates."""
    _check_prob(p1, "p1")
    _check_prob(p2, "p2")
    denom = math.sqrt(p1 * (1 - p1) * p2 * (1 - p2))
    return (min(p1, p2) - p1 * p2) / denom


def joint_prob(p1: float, p2: float, rho: float) -> float:
    """P(both events) for the given marginals and correlation."""
    lo, hi = lower_corr(p1, p2), upper_corr(p1, p2)
    if not lo <= rho <= hi:
        raise InfeasibleError(
            f"correlation {rho} outside the feasible range [{lo:.4f}, {hi:.4f}]",
            field="rho",
        )
    return p1 * p2 + rho * math.sqrt(p1 * (1 - p1) * p2 * (1 - p2))


def prob_cbe(p1: float, p2: float, rho: float = 0.0) -> float:
    """Probability of observing the composite (either component event)."""
    return p1 + p2 - joint_prob(p1, p2, rho)


def treated_prob(p0: float, eff: float, measure: str) -> float:
    """Treated-arm probability implied by the anticipated component effect."""
    _check_prob(p0, "p0")
    measure = _check_measure(measure, "effm")
    if measure == "diff":
        p1 = p0 + eff
    elif measure == "rr":
        if eff <= 0.0:
            raise DomainError("a relative risk must be positive", field="eff")
        p1 = p0 * eff
    else:
        if eff <= 0.0:
            raise DomainError("an odds ratio must be positive", field="eff")
        odds = eff * p0 / (1.0 - p0)
        p1 = odds / (1.0 + odds)
    if not 0.0 < p1 < 1.0:
        raise InfeasibleError(
            f"effect {eff} ({measure}) pushes the probability to {p1:.4f}, outside (0, 1)",
            field="eff",
        )
    return p1


def _effect_value(p0: float, p1: float, measure: str) -> float:
    if measure == "diff":
        return p1 - p0
    if measure == "rr":
        return p1 / p0
    return (p1 / (1.0 - p1)) / (p0 / (1.0 - p0))


@dataclass(frozen=True)
class BinaryDesign:
    """Anticipated parameters of a two-arm binary composite design."""

    p0_e1: float
    p0_e2: float
    eff_e1: float
    eff_e2: float
    rho: float
    effm_e1: str = "diff"
    effm_e2: str = "diff"
    effm_ce: str = "diff"
    alpha: float = 0.05
    beta: float = 0.20
    unpooled: bool = True

    def __post_init__(self):
        _check_prob(self.p0_e1, "p0_e1")
        _check_prob(self.p0_e2, "p0_e2")
        object.__setattr__(self, "effm_e1", _check_measure(self.effm_e1, "effm_e1"))
        object.__setattr__(self, "effm_e2", _check_measure(self.effm_e2, "effm_e2"))
        object.__setattr__(self, "effm_ce", _check_measure(self.effm_ce, "effm_ce"))
        if not 0.0 < self.alpha < 1.0:
            raise DomainError("alpha must lie in (0, 1)", field="alpha")
        if not 0.0 < self.beta < 1.0:
            raise DomainError("beta must lie in (0, 1)", field="beta")
        # the treated probabilities must exist and rho must be feasible in both arms
        p1_t = treated_prob(self.p0_e1, self.eff_e1, self.effm_e1)
        p2_t = treated_prob(self.p0_e2, self.eff_e2, self.effm_e2)
        for arm, (a, b) in (("control", (self.p0_e1, self.p0_e2)), ("treated", (p1_t, p2_t))):
            lo, hi = lower_corr(a, b), upper_corr(a, b)
            if not lo <= self.rho <= hi:
                raise InfeasibleError(
                    f"correlation {self.rho} infeasible in the {arm} arm "
                    f"(bounds [{lo:.4f}, {hi:.4f}])",
                    field="rho",
                )

    @property
    def treated_e1(self) -> float:
        return treated_prob(self.p0_e1, self.eff_e1, self.effm_e1)

    @property
    def treated_e2(self) -> float:
        return treated_prob(self.p0_e2, self.eff_e2, self.effm_e2)


@dataclass(frozen=True)
class BinaryEffectReport:
    prob_ce_control: float
    prob_ce_treated: float
    effect: float
    measure: str


def effectsize_cbe(design: BinaryDesign) -> BinaryEffectReport:
    """Composite event probabilities per arm and the composite effect in the
    requested measure; the correlation is assumed equal in both arms."""
    p_control = prob_cbe(design.p0_e1, design.p0_e2, design.rho)
    p_treated = prob_cbe(design.treated_e1, design.treated_e2, design.rho)
    return BinaryEffectReport(
        prob_ce_control=p_control,
        prob_ce_treated=p_treated,
        effect=_effect_value(p_control, p_treated, design.effm_ce),
        measure=design.effm_ce,
    )


def _per_arm_n(p0: float, p1: float, measure: str, alpha: float, beta: float,
               unpooled: bool) -> float:
    z_alpha = normal_quantile(1.0 - alpha / 2.0)
    z_beta = normal_quantile(1.0 - beta)
    q0, q1 = 1.0 - p0, 1.0 - p1
    if measure == "diff":
        delta = p1 - p0
        if unpooled:
            return (z_alpha + z_beta) ** 2 * (p0 * q0 + p1 * q1) / delta ** 2
        p_bar = 0.5 * (p0 + p1)
        q_bar = 1.0 - p_bar
        return (
            z_alpha * math.sqrt(2.0 * p_bar * q_bar)
            + z_beta * math.sqrt(p0 * q0 + p1 * q1)
        ) ** 2 / delta ** 2
    if measure == "rr":
        return (z_alpha + z_beta) ** 2 * (q0 / p0 + q1 / p1) / math.log(p1 / p0) ** 2
    log_or = math.log((p1 / q1) / (p0 / q0))
    return (z_alpha + z_beta) ** 2 * (1.0 / (p0 * q0) + 1.0 / (p1 * q1)) / log_or ** 2


@dataclass(frozen=True)
class BinarySampleSize:
    total: int
    per_arm: int
    prob_ce_control: float
    prob_ce_treated: float
    effect: float
    measure: str


def samplesize_cbe(design: BinaryDesign) -> BinarySampleSize:
    """Total sample size (balanced arms) to detect the composite effect."""
    report = effectsize_cbe(design)
    p0, p1 = report.prob_ce_control, report.prob_ce_treated
    if p0 == p1:
        raise InfeasibleError("null composite effect is undetectable", field="eff_e1")
    per_arm = math.ceil(
        _per_arm_n(p0, p1, design.effm_ce, design.alpha, design.beta, design.unpooled)
    )
    return BinarySampleSize(
        total=2 * per_arm,
        per_arm=per_arm,
        prob_ce_control=p0,
        prob_ce_treated=p1,
        effect=report.effect,
        measure=report.measure,
    )


def are_cbe(design: BinaryDesign) -> float:
    """Squared ratio of the two-proportion noncentralities, composite over the
    first component; the common per-arm sample size cancels."""
    p10, p11 = design.p0_e1, design.treated_e1
    if p10 == p11:
        raise InfeasibleError(
            "ARE is undefined when the relevant endpoint carries no effect", field="eff_e1"
        )
    report = effectsize_cbe(design)
    pc0, pc1 = report.prob_ce_control, report.prob_ce_treated

    def noncentrality(p0, p1):
        return (p1 - p0) / math.sqrt(p0 * (1 - p0) + p1 * (1 - p1))

    return (noncentrality(pc0, pc1) / noncentrality(p10, p11)) ** 2
