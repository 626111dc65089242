"""Sensitivity of the composite sample size and the ARE to the association,
the second component's hazard ratio and its Weibull shape.

Writes one CSV per stratification next to this script (columns rho, are,
n_composite), mirroring the what-if panels of the exploration UI.
"""

import dataclasses
import pathlib

import numpy as np

from composite_design import TTEDesign, sensitivity_curves

BASE = TTEDesign(
    p0_e1=0.59, p0_e2=0.74, hr_e1=0.91, hr_e2=0.77,
    beta_e1=1.0, beta_e2=2.0, case=3, copula="frank",
    rho=0.5, rho_type="spearman",
)

RHO_GRID = np.round(np.arange(0.0, 0.91, 0.05), 10)


def scan(tag, **overrides):
    design = dataclasses.replace(BASE, **overrides)
    table = sensitivity_curves(design, rho_grid=RHO_GRID)
    out = pathlib.Path(__file__).with_name(f"sensitivity_{tag}.csv")
    out.write_text(table.to_csv())
    span = f"n {table.n_composite.min()}..{table.n_composite.max()}"
    print(f"{tag:<12} {span:<16} are {table.are.min():.2f}..{table.are.max():.2f} -> {out.name}")


def main():
    for hr2 in (0.65, 0.77, 0.85):
        scan(f"hr2_{hr2}", hr_e2=hr2)
    for beta2 in (0.5, 1.0, 2.0):
        scan(f"beta2_{beta2}", beta_e2=beta2)


if __name__ == "__main__":
    main()
