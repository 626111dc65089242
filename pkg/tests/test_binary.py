import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from composite_design import (
    BinaryDesign,
    DomainError,
    InfeasibleError,
    are_cbe,
    effectsize_cbe,
    lower_corr,
    prob_cbe,
    samplesize_cbe,
    treated_prob,
    upper_corr,
)

from oracles import table_corr_bounds, table_union_prob

probs = st.floats(0.05, 0.95)


class TestCorrBounds:
    def test_symmetric_half(self):
        assert lower_corr(0.5, 0.5) == pytest.approx(-1.0, abs=1e-12)
        assert upper_corr(0.5, 0.5) == pytest.approx(1.0, abs=1e-12)

    def test_upper_example(self):
        expected = (0.3 - 0.18) / math.sqrt(0.3 * 0.7 * 0.6 * 0.4)
        assert upper_corr(0.3, 0.6) == pytest.approx(expected, rel=1e-12)
        assert upper_corr(0.3, 0.6) == pytest.approx(0.5345, abs=1e-4)

    def test_lower_example(self):
        expected = (0.1 - 0.18) / math.sqrt(0.2 * 0.8 * 0.9 * 0.1)
        assert lower_corr(0.2, 0.9) == pytest.approx(expected, rel=1e-12)
        assert lower_corr(0.2, 0.9) == pytest.approx(-0.6667, abs=1e-4)

    def test_boundary_probability_rejected(self):
        with pytest.raises(DomainError):
            lower_corr(0.0, 0.5)

    @given(p1=probs, p2=probs)
    def test_matches_table_enumeration(self, p1, p2):
        lo, hi = table_corr_bounds(p1, p2)
        assert lower_corr(p1, p2) == pytest.approx(lo, abs=1e-12)
        assert upper_corr(p1, p2) == pytest.approx(hi, abs=1e-12)
        assert lo <= 0.0 <= hi


class TestProbCbe:
    def test_independence(self):
        assert prob_cbe(0.3, 0.2, 0.0) == pytest.approx(0.44, abs=1e-15)

    def test_comonotone_equal_marginals(self):
        assert prob_cbe(0.3, 0.3, 1.0) == pytest.approx(0.3, abs=1e-12)

    def test_against_table_oracle(self):
        assert prob_cbe(0.59, 0.74, 0.3) == pytest.approx(
            table_union_prob(0.59, 0.74, 0.3), abs=1e-14
        )

    def test_infeasible_rho(self):
        with pytest.raises(InfeasibleError):
            prob_cbe(0.3, 0.6, 0.9)

    @given(p1=probs, p2=probs)
    def test_independence_complement_identity(self, p1, p2):
        assert prob_cbe(p1, p2, 0.0) == pytest.approx(
            1.0 - (1.0 - p1) * (1.0 - p2), abs=1e-14
        )

    def test_strictly_decreasing_in_rho(self):
        grid = np.linspace(0.0, upper_corr(0.4, 0.3) - 1e-9, 25)
        values = [prob_cbe(0.4, 0.3, r) for r in grid]
        assert all(b < a for a, b in zip(values, values[1:]))

    @given(p1=probs, p2=probs)
    def test_range(self, p1, p2):
        value = prob_cbe(p1, p2, 0.5 * upper_corr(p1, p2))
        assert max(p1, p2) <= value <= min(1.0, p1 + p2) + 1e-12


class TestTreatedProb:
    def test_diff(self):
        assert treated_prob(0.3, -0.1, "diff") == pytest.approx(0.2, abs=1e-15)

    def test_null_relative_risk(self):
        assert treated_prob(0.3, 1.0, "rr") == pytest.approx(0.3, abs=1e-15)

    def test_odds_ratio(self):
        odds = 0.5 * 0.3 / 0.7
        assert treated_prob(0.3, 0.5, "or") == pytest.approx(odds / (1 + odds), rel=1e-12)
        assert treated_prob(0.3, 0.5, "or") == pytest.approx(0.1765, abs=1e-4)

    def test_infeasible_effect(self):
        with pytest.raises(InfeasibleError):
            treated_prob(0.3, 0.8, "diff")

    def test_unknown_measure(self):
        with pytest.raises(DomainError):
            treated_prob(0.3, 0.8, "hazard")


def make_design(**overrides):
    base = dict(p0_e1=0.3, p0_e2=0.2, eff_e1=-0.1, eff_e2=-0.05, rho=0.0,
                effm_e1="diff", effm_e2="diff", effm_ce="diff")
    base.update(overrides)
    return BinaryDesign(**base)


class TestEffectsizeCbe:
    def test_null_effects(self):
        report = effectsize_cbe(make_design(eff_e1=0.0, eff_e2=0.0))
        assert report.effect == pytest.approx(0.0, abs=1e-15)
        rr = effectsize_cbe(make_design(eff_e1=0.0, eff_e2=0.0, effm_ce="rr"))
        assert rr.effect == pytest.approx(1.0, abs=1e-15)

    def test_independence_arithmetic(self):
        report = effectsize_cbe(make_design())
        assert report.prob_ce_control == pytest.approx(0.44, abs=1e-14)
        assert report.prob_ce_treated == pytest.approx(1.0 - 0.8 * 0.85, abs=1e-14)
        assert report.effect == pytest.approx(-0.12, abs=1e-14)

    def test_relative_risk_measure(self):
        report = effectsize_cbe(make_design(effm_ce="rr"))
        assert report.effect == pytest.approx(0.32 / 0.44, abs=1e-4)

    def test_measures_mutually_consistent(self):
        d = make_design(rho=0.15)
        diff = effectsize_cbe(make_design(rho=0.15, effm_ce="diff"))
        rr = effectsize_cbe(make_design(rho=0.15, effm_ce="rr"))
        orr = effectsize_cbe(make_design(rho=0.15, effm_ce="or"))
        p0, p1 = diff.prob_ce_control, diff.prob_ce_treated
        assert rr.effect == pytest.approx(p1 / p0, rel=1e-12)
        assert diff.effect == pytest.approx(p1 - p0, rel=1e-12)
        assert orr.effect == pytest.approx((p1 / (1 - p1)) / (p0 / (1 - p0)), rel=1e-12)

    def test_infeasible_rho_names_arm(self):
        with pytest.raises(InfeasibleError, match="arm"):
            make_design(p0_e1=0.05, p0_e2=0.9, eff_e1=-0.01, eff_e2=-0.05, rho=0.5)


class TestSamplesizeCbe:
    def test_hand_evaluated_unpooled_diff(self):
        # composite probabilities 0.3 vs 0.2: per-arm (z sum)^2 * 0.37 / 0.01
        design = make_design(p0_e1=0.3, p0_e2=1e-9, eff_e1=-0.1, eff_e2=0.0)
        report = samplesize_cbe(design)
        assert report.per_arm == 291
        assert report.total == 582

    def test_pooled_differs_from_unpooled(self):
        unpooled = samplesize_cbe(make_design())
        pooled = samplesize_cbe(make_design(unpooled=False))
        assert unpooled.total != pooled.total

    def test_null_effect(self):
        with pytest.raises(InfeasibleError):
            samplesize_cbe(make_design(eff_e1=0.0, eff_e2=0.0))

    def test_monotone_in_effect_size(self):
        totals = [
            samplesize_cbe(make_design(eff_e1=eff, eff_e2=-0.05)).total
            for eff in (-0.06, -0.1, -0.14, -0.18)
        ]
        assert all(b < a for a, b in zip(totals, totals[1:]))

    @pytest.mark.parametrize("measure", ["rr", "or"])
    def test_ratio_measures_run(self, measure):
        design = make_design(eff_e1=0.7, eff_e2=0.8, effm_e1="rr", effm_e2="rr",
                             effm_ce=measure)
        assert samplesize_cbe(design).total > 0


class TestAreCbe:
    def test_degenerates_to_one(self):
        design = make_design(p0_e2=1e-6, eff_e2=0.0)
        assert are_cbe(design) == pytest.approx(1.0, abs=1e-3)

    def test_symmetric_design_favors_composite(self):
        design = make_design(p0_e1=0.25, p0_e2=0.25, eff_e1=-0.08, eff_e2=-0.08)
        assert are_cbe(design) > 1.0

    def test_null_relevant_effect(self):
        with pytest.raises(InfeasibleError):
            are_cbe(make_design(eff_e1=0.0))

    def test_matches_samplesize_ratio(self):
        """ARE approximates the single-component versus composite sample-size ratio."""
        design = make_design(p0_e1=0.25, p0_e2=0.25, eff_e1=-0.08, eff_e2=-0.08)
        n_composite = samplesize_cbe(design).total
        solo = make_design(p0_e1=0.25, p0_e2=1e-9, eff_e1=-0.08, eff_e2=0.0)
        n_relevant = samplesize_cbe(solo).total
        assert are_cbe(design) == pytest.approx(n_relevant / n_composite, rel=0.05)
