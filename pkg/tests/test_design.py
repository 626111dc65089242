import dataclasses
import math

import numpy as np
import pytest

from composite_design import (
    InfeasibleError,
    TTEDesign,
    are_tte,
    calibrate,
    events_required,
    samplesize_tte,
    sensitivity_curves,
)
from composite_design.design import format_samplesize_table
from composite_design.numerics import normal_quantile
from composite_design.simulate import simulate_tte

from oracles import logrank_z

Z_SUM = normal_quantile(0.975) + normal_quantile(0.80)


class TestEventsRequired:
    def test_schoenfeld_at_composite_effect(self):
        # hand evaluation: 4 * (1.959964 + 0.841621)^2 / ln(0.7989)^2
        expected = 4.0 * Z_SUM**2 / math.log(0.7989) ** 2
        value = events_required(0.7989)
        assert value == pytest.approx(expected, rel=1e-12)
        assert value == pytest.approx(622.8, abs=0.5)

    def test_freedman_half(self):
        expected = Z_SUM**2 * 9.0
        value = events_required(0.5, formula="freedman")
        assert value == pytest.approx(expected, rel=1e-12)
        assert value == pytest.approx(70.64, abs=0.1)

    def test_null_effect(self):
        with pytest.raises(InfeasibleError):
            events_required(1.0)

    def test_formula_agreement_near_null(self):
        for effect in (0.95, 0.98, 1.02, 1.05):
            s = events_required(effect, formula="schoenfeld")
            f = events_required(effect, formula="freedman")
            assert abs(s - f) / s < 0.01

    def test_formula_divergence_monotone(self):
        effects = [0.9, 0.8, 0.7, 0.6, 0.5]
        gaps = [
            abs(events_required(e, formula="freedman") - events_required(e)) / events_required(e)
            for e in effects
        ]
        assert all(later > earlier for earlier, later in zip(gaps, gaps[1:]))


class TestSampleSize:
    def test_worked_example_exact_integers(self, lung_design):
        report = samplesize_tte(lung_design)
        assert report.n_endpoint1 == 6162
        assert report.n_endpoint2 == 620
        assert report.n_composite == 636

    def test_endpoint1_hand_chain(self, lung_design):
        law = calibrate(lung_design)
        p_avg = 0.5 * (0.59 + law.observed_event_prob(1, True))
        by_hand = 2 * math.ceil(4 * Z_SUM**2 / (math.log(0.91) ** 2) / (2 * p_avg))
        assert by_hand == 6162
        assert samplesize_tte(lung_design).n_endpoint1 == by_hand

    def test_events_identity(self, lung_design):
        report = samplesize_tte(lung_design)
        realized = report.n_composite * report.prob_avg_composite
        assert realized == pytest.approx(report.events_composite, abs=2.0)

    def test_null_effect_rejected(self, lung_design):
        null = dataclasses.replace(lung_design, hr_e1=1.0, hr_e2=1.0)
        with pytest.raises(InfeasibleError):
            samplesize_tte(null)

    def test_all_totals_even(self, lung_design):
        report = samplesize_tte(lung_design)
        for n in (report.n_endpoint1, report.n_endpoint2, report.n_composite):
            assert n % 2 == 0

    def test_higher_power_needs_more_subjects(self, lung_design):
        lower = samplesize_tte(lung_design, power=0.80)
        higher = samplesize_tte(lung_design, power=0.90)
        assert higher.n_endpoint1 > lower.n_endpoint1
        assert higher.n_endpoint2 > lower.n_endpoint2
        assert higher.n_composite > lower.n_composite

    def test_table_layout(self, lung_design):
        table = format_samplesize_table(samplesize_tte(lung_design))
        assert table.splitlines()[-1] == "Composite endpoint 636"
        assert "Endpoint 1         6162" in table


class TestARE:
    def test_worked_example(self, lung_design):
        report = are_tte(lung_design)
        assert report.are == pytest.approx(9.303, abs=0.01)
        assert report.are == pytest.approx(
            (report.noncentrality_composite / report.noncentrality_relevant) ** 2, rel=1e-12
        )

    def test_degenerates_to_one_without_second_component(self, lung_design):
        slim = dataclasses.replace(lung_design, p0_e2=1e-4)
        assert are_tte(slim).are == pytest.approx(1.0, abs=0.02)

    def test_null_relevant_effect(self, lung_design):
        with pytest.raises(InfeasibleError):
            are_tte(dataclasses.replace(lung_design, hr_e1=1.0))

    def test_followup_unit_invariance(self, lung_design):
        base = are_tte(lung_design).are
        scaled = are_tte(dataclasses.replace(lung_design, followup_time=3.7)).are
        assert scaled == pytest.approx(base, abs=1e-6)

    def test_against_simulated_noncentrality_ratio(self):
        """The squared ratio of mean logrank statistics estimates the ARE."""
        design = TTEDesign(p0_e1=0.3, p0_e2=0.3, hr_e1=0.8, hr_e2=1.0, rho=0.0, case=1)
        expected = are_tte(design).are
        law = calibrate(design)
        n_per_arm, trials = 400, 3000
        rng = np.random.default_rng(99)
        z_composite, z_relevant = [], []
        for _ in range(trials):
            data = simulate_tte(design, n_per_arm, rng.integers(2**63), law=law)
            z_composite.append(logrank_z(data.time_ce, data.status_ce, data.treated))
            z_relevant.append(logrank_z(data.time_e1, data.status_e1, data.treated))
        ratio = (np.mean(z_composite) / np.mean(z_relevant)) ** 2
        assert ratio == pytest.approx(expected, rel=0.15)


class TestSensitivity:
    def test_single_point_matches_direct_calls(self, lung_design):
        table = sensitivity_curves(lung_design, rho_grid=[0.5])
        assert table.are[0] == pytest.approx(are_tte(lung_design).are, rel=1e-12)
        assert table.n_composite[0] == samplesize_tte(lung_design).n_composite

    def test_are_stays_near_ten(self, lung_design):
        table = sensitivity_curves(lung_design, rho_grid=np.arange(0.0, 0.91, 0.1))
        assert np.all(table.are > 8.0) and np.all(table.are < 12.0)

    def test_csv_export_columns(self, lung_design):
        text = sensitivity_curves(lung_design, rho_grid=[0.0, 0.5]).to_csv()
        lines = text.strip().splitlines()
        assert lines[0] == "rho,are,n_composite"
        assert len(lines) == 3
        assert lines[2].split(",")[2] == "636"

    def test_grid_validation(self, lung_design):
        with pytest.raises(Exception):
            sensitivity_curves(lung_design, rho_grid=[0.5, 1.2])
