"""Independent oracles used to freeze expected values.

Everything here deliberately avoids the library's own code paths: brute-force
2x2 table arithmetic, finite differences, Monte-Carlo rank statistics, a
from-scratch logrank test and Wald two-proportion tests.
"""

from __future__ import annotations

import numpy as np
from scipy import stats


def central_difference(f, x, h=1e-5):
    return (f(x + h) - f(x - h)) / (2.0 * h)


def table_cells(p1, p2, rho):
    """All four joint cells of a Bernoulli pair with the given correlation."""
    p11 = p1 * p2 + rho * np.sqrt(p1 * (1 - p1) * p2 * (1 - p2))
    return np.array([p11, p1 - p11, p2 - p11, 1.0 - p1 - p2 + p11])


def table_union_prob(p1, p2, rho):
    """P(either event) summed cell by cell; raises if the table is invalid."""
    cells = table_cells(p1, p2, rho)
    assert np.all(cells >= -1e-12), f"invalid table for rho={rho}"
    return float(cells[0] + cells[1] + cells[2])


def table_corr_bounds(p1, p2):
    """Pearson-correlation extremes by enumerating the cell constraints."""
    candidates = [0.0, p1, p2, p1 + p2 - 1.0]
    feasible = []
    for p11 in candidates:
        cells = np.array([p11, p1 - p11, p2 - p11, 1.0 - p1 - p2 + p11])
        if np.all(cells >= -1e-15):
            feasible.append((p11 - p1 * p2) / np.sqrt(p1 * (1 - p1) * p2 * (1 - p2)))
    return min(feasible), max(feasible)


def mc_spearman(u, v):
    return float(stats.spearmanr(u, v).statistic)


def mc_kendall(u, v):
    return float(stats.kendalltau(u, v).statistic)


def ks_pvalue_against(sample, cdf):
    return float(stats.kstest(sample, cdf).pvalue)


def logrank_z(time, status, group):
    """Logrank statistic, positive when group 1 has fewer events.

    Assumes continuous event times (no event ties), which holds for the
    simulated datasets here.
    """
    order = np.argsort(time, kind="stable")
    t = np.asarray(time)[order]
    d = np.asarray(status)[order]
    g = np.asarray(group)[order]
    n = t.size
    at_risk = n - np.arange(n)
    in_one = np.cumsum(g[::-1])[::-1]
    events = d == 1
    expected = in_one[events] / at_risk[events]
    observed = g[events]
    variance = expected * (1.0 - expected)
    return float((observed.sum() - expected.sum()) / np.sqrt(variance.sum()))


def two_proportion_z(x0, x1, n, measure, unpooled=True):
    """Wald z statistics (vectorized over replicate trials)."""
    x0 = np.asarray(x0, dtype=float)
    x1 = np.asarray(x1, dtype=float)
    p0 = np.clip(x0 / n, 1e-9, 1 - 1e-9)
    p1 = np.clip(x1 / n, 1e-9, 1 - 1e-9)
    q0, q1 = 1 - p0, 1 - p1
    if measure == "diff":
        if unpooled:
            se = np.sqrt(p0 * q0 / n + p1 * q1 / n)
        else:
            pb = (x0 + x1) / (2 * n)
            se = np.sqrt(2 * pb * (1 - pb) / n)
        return (p1 - p0) / se
    if measure == "rr":
        se = np.sqrt(q0 / (n * p0) + q1 / (n * p1))
        return np.log(p1 / p0) / se
    se = np.sqrt(1 / (n * p0 * q0) + 1 / (n * p1 * q1))
    return np.log((p1 / q1) / (p0 / q0)) / se
