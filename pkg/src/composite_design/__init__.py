"""Design engine for clinical trials with composite endpoints.

Derives the probability law of a two-component composite endpoint from
anticipated component-level parameters (event probabilities, hazard ratios,
Weibull shapes, copula association) and computes effect sizes, required
sample sizes and the endpoint-selection (ARE) criterion, for both
time-to-event and binary composites, plus seeded trial simulators.
"""

from .binary import (
    BinaryDesign,
    BinaryEffectReport,
    BinarySampleSize,
    are_cbe,
    effectsize_cbe,
    lower_corr,
    prob_cbe,
    samplesize_cbe,
    treated_prob,
    upper_corr,
)
from .copulas import AssociationSpec, CopulaSpec, theta_from_association
from .design import (
    AREReport,
    SampleSizeReport,
    SensitivityTable,
    are_tte,
    events_required,
    samplesize_tte,
    sensitivity_curves,
)
from .effects import ArmSummary, EffectReport, effectsize_report
from .errors import (
    BracketingError,
    CalibrationError,
    DesignError,
    DomainError,
    InfeasibleError,
    IntegrationError,
    MedianUndefinedError,
)
from .law import CompositeLaw, SurvivalCurves, TTEDesign, calibrate
from .numerics import QuadratureSpec, find_root, integrate, normal_quantile
from .simulate import BinaryTrial, TimeToEventTrial, simulate_cbe, simulate_tte
from .weibull import AnchoredProbability, WeibullMarginal

__version__ = "0.1.0"

__all__ = [
    "AnchoredProbability",
    "AREReport",
    "ArmSummary",
    "AssociationSpec",
    "BinaryDesign",
    "BinaryEffectReport",
    "BinarySampleSize",
    "BinaryTrial",
    "BracketingError",
    "CalibrationError",
    "CompositeLaw",
    "CopulaSpec",
    "DesignError",
    "DomainError",
    "EffectReport",
    "InfeasibleError",
    "IntegrationError",
    "MedianUndefinedError",
    "QuadratureSpec",
    "SampleSizeReport",
    "SensitivityTable",
    "SurvivalCurves",
    "TimeToEventTrial",
    "TTEDesign",
    "WeibullMarginal",
    "are_cbe",
    "are_tte",
    "calibrate",
    "effectsize_cbe",
    "effectsize_report",
    "events_required",
    "find_root",
    "integrate",
    "lower_corr",
    "normal_quantile",
    "prob_cbe",
    "samplesize_cbe",
    "samplesize_tte",
    "sensitivity_curves",
    "simulate_cbe",
    "simulate_tte",
    "theta_from_association",
    "treated_prob",
    "upper_corr",
]
