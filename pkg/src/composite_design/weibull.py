"""Weibull marginal laws anchored by the event probability at the follow-up
horizon, with the proportional-hazards power rule for the treated arm."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = ["AnchoredProbability", "WeibullMarginal"]


@dataclass(frozen=True)
class AnchoredProbability:
    """Probability of the event by `horizon` time units."""

    value: float
    horizon: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.value < 1.0:
            raise DomainError("anchored probability must lie strictly in (0, 1)", field="value")
        if not self.horizon > 0.0:
            raise DomainError("horizon must be positive", field="horizon")


@dataclass(frozen=True)
class WeibullMarginal:
    """S(t) = exp(-(t/scale)^shape).

    shape < 1 gives a decreasing hazard (singular at t = 0), shape = 1 a
    constant hazard, shape > 1 an increasing one.
    """

    shape: float
    scale: float

    def __post_init__(self):
        if not self.shape > 0.0:
            raise DomainError("shape must be positive", field="shape")
        if not self.scale > 0.0:
            raise DomainError("scale must be positive", field="scale")

    @classmethod
    def from_anchor(cls, anchor: AnchoredProbability, shape: float) -> "WeibullMarginal":
        """Scale solving 1 - exp(-(horizon/scale)^shape) = anchor.value."""
        scale = anchor.horizon / (-math.log1p(-anchor.value)) ** (1.0 / shape)
        return cls(shape=shape, scale=scale)

    def survival(self, t):
        t = np.asarray(t, dtype=float)
        return np.exp(-((t / self.scale) ** self.shape))

    def density(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore"):
            base = (self.shape / self.scale) * (t / self.scale) ** (self.shape - 1.0)
        return base * self.survival(t)

    def hazard(self, t):
        # (shape/scale) * (t/scale)^(shape-1); +inf at t=0 when shape < 1
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore"):
            return (self.shape / self.scale) * (t / self.scale) ** (self.shape - 1.0)

    def quantile(self, u):
        """Time by which the event probability reaches u."""
        u = np.asarray(u, dtype=float)
        if np.any((u <= 0.0) | (u >= 1.0)):
            raise DomainError("quantile requires 0 < u < 1", field="u")
        return self.scale * (-np.log1p(-u)) ** (1.0 / self.shape)

    def time_from_survival(self, s):
        """Inverse of the survival function (used to map copula uniforms to times)."""
        s = np.asarray(s, dtype=float)
        return self.scale * (-np.log(s)) ** (1.0 / self.shape)

    def event_prob(self, t):
        return 1.0 - self.survival(t)

    def power_rule(self, hr: float) -> "WeibullMarginal":
        """Marginal of the treated arm under a proportional hazard ratio `hr`.

        Same shape, scale * hr**(-1/shape); equivalently S_treated = S**hr.
        """
        if not hr > 0.0:
            raise DomainError("hazard ratio must be positive", field="hr")
        return WeibullMarginal(self.shape, self.scale * hr ** (-1.0 / self.shape))
