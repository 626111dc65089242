"""Trial-data generators: correlated component times with administrative
censoring (time-to-event) and correlated component indicators (binary).

Both generators take an explicit seed and own a private generator per call,
so concurrent simulations with distinct seeds are independent and a repeated
seed reproduces the dataset bit for bit.  Control rows come first, treated
rows last.  Latent component times are emitted without competing-risk
truncation: a row can carry an observed component event that postdates the
composite event.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from . import copulas
from .binary import BinaryDesign, joint_prob
from .errors import DomainError
from .law import CompositeLaw, TTEDesign, calibrate

__all__ = ["TimeToEventTrial", "BinaryTrial", "simulate_tte", "simulate_cbe"]

TTE_COLUMNS = ("time_e1", "status_e1", "time_e2", "status_e2",
               "time_ce", "status_ce", "treated")
CBE_COLUMNS = ("e1", "e2", "ce", "treated")


@dataclass(frozen=True)
class TimeToEventTrial:
    """Two-arm right-censored dataset; censored times sit exactly at the
    follow-up time with status 0."""

    time_e1: np.ndarray
    status_e1: np.ndarray
    time_e2: np.ndarray
    status_e2: np.ndarray
    time_ce: np.ndarray
    status_ce: np.ndarray
    treated: np.ndarray

    def __len__(self):
        return self.time_e1.size

    def columns(self) -> dict:
        return {name: getattr(self, name) for name in TTE_COLUMNS}

    def to_csv(self, path=None) -> str | None:
        return _write_csv(TTE_COLUMNS, self.columns(), path)


@dataclass(frozen=True)
class BinaryTrial:
    e1: np.ndarray
    e2: np.ndarray
    ce: np.ndarray
    treated: np.ndarray

    def __len__(self):
        return self.e1.size

    def columns(self) -> dict:
        return {name: getattr(self, name) for name in CBE_COLUMNS}

    def to_csv(self, path=None) -> str | None:
        return _write_csv(CBE_COLUMNS, self.columns(), path)


def _write_csv(names, columns, path):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(names)
    cols = [columns[name] for name in names]
    integral = [np.issubdtype(col.dtype, np.integer) for col in cols]
    for row in zip(*cols):
        writer.writerow(
            [int(x) if is_int else repr(float(x)) for x, is_int in zip(row, integral)]
        )
    text = buffer.getvalue()
    if path is None:
        return text
    with open(path, "w", newline="") as handle:
        handle.write(text)
    return None


def _arm_times(law_arm, n: int, rng_seed) -> tuple[np.ndarray, np.ndarray]:
    u, v = copulas.sample(law_arm.copula, n, rng_seed)
    t1 = law_arm.e1.time_from_survival(u)
    t2 = law_arm.e2.time_from_survival(v)
    return t1, t2


def simulate_tte(
    design: TTEDesign,
    sample_size: int,
    seed,
    subdivisions: int = 1000,
    law: CompositeLaw | None = None,
) -> TimeToEventTrial:
    """`sample_size` subjects per arm from the calibrated joint law, censored
    administratively at the follow-up time."""
    if sample_size < 1:
        raise DomainError("sample_size must be at least 1", field="sample_size")
    law = law if law is not None else calibrate(design, subdivisions)
    tau = design.followup_time
    rng = np.random.default_rng(seed)
    per_arm = []
    for arm in (law.control, law.treated):
        t1, t2 = _arm_times(arm, sample_size, rng.spawn(1)[0])
        t_star = np.minimum(t1, t2)
        per_arm.append(
            (
                np.minimum(t1, tau), (t1 <= tau).astype(np.int64),
                np.minimum(t2, tau), (t2 <= tau).astype(np.int64),
                np.minimum(t_star, tau), (t_star <= tau).astype(np.int64),
            )
        )
    control, treated = per_arm
    stacked = [np.concatenate([c, t]) for c, t in zip(control, treated)]
    flags = np.concatenate(
        [np.zeros(sample_size, dtype=np.int64), np.ones(sample_size, dtype=np.int64)]
    )
    return TimeToEventTrial(
        time_e1=stacked[0], status_e1=stacked[1],
        time_e2=stacked[2], status_e2=stacked[3],
        time_ce=stacked[4], status_ce=stacked[5],
        treated=flags,
    )


def _arm_indicators(p1: float, p2: float, rho: float, n: int, rng) -> tuple[np.ndarray, np.ndarray]:
    p11 = joint_prob(p1, p2, rho)
    cells = np.array([p11, p1 - p11, p2 - p11, 1.0 - p1 - p2 + p11])
    draw = rng.choice(4, size=n, p=cells)
    e1 = ((draw == 0) | (draw == 1)).astype(np.int64)
    e2 = ((draw == 0) | (draw == 2)).astype(np.int64)
    return e1, e2


def simulate_cbe(design: BinaryDesign, sample_size: int, seed) -> BinaryTrial:
    """`sample_size` subjects per arm with correlated component indicators."""
    if sample_size < 1:
        raise DomainError("sample_size must be at least 1", field="sample_size")
    rng = np.random.default_rng(seed)
    e1_c, e2_c = _arm_indicators(design.p0_e1, design.p0_e2, design.rho, sample_size, rng)
    e1_t, e2_t = _arm_indicators(design.treated_e1, design.treated_e2, design.rho,
                                 sample_size, rng)
    e1 = np.concatenate([e1_c, e1_t])
    e2 = np.concatenate([e2_c, e2_t])
    flags = np.concatenate(
        [np.zeros(sample_size, dtype=np.int64), np.ones(sample_size, dtype=np.int64)]
    )
    return BinaryTrial(e1=e1, e2=e2, ce=np.maximum(e1, e2), treated=flags)
