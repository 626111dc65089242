import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from composite_design import TTEDesign

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def lung_design():
    """Worked oncology example: overall survival (fatal) plus disease
    progression, moderately correlated, one-year follow-up."""
    return TTEDesign(
        p0_e1=0.59, p0_e2=0.74, hr_e1=0.91, hr_e2=0.77, rho=0.5,
        beta_e1=1.0, beta_e2=2.0, case=3, copula="frank",
        rho_type="spearman", followup_time=1.0,
    )
