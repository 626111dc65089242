import numpy as np
import pytest

from composite_design import (
    BinaryDesign,
    DomainError,
    TTEDesign,
    calibrate,
    simulate_cbe,
    simulate_tte,
)

from oracles import ks_pvalue_against


@pytest.fixture(scope="module")
def lung_trial(lung_design):
    return simulate_tte(lung_design, 1000, seed=12345)


class TestTimeToEventLayout:
    def test_row_count_and_arm_order(self, lung_trial):
        assert len(lung_trial) == 2000
        assert np.all(lung_trial.treated[:1000] == 0)
        assert np.all(lung_trial.treated[1000:] == 1)

    def test_censored_rows_sit_exactly_at_followup(self, lung_trial):
        for time, status in (
            (lung_trial.time_e1, lung_trial.status_e1),
            (lung_trial.time_e2, lung_trial.status_e2),
            (lung_trial.time_ce, lung_trial.status_ce),
        ):
            assert np.all(time[status == 0] == 1.0)
            assert np.all(time[status == 1] < 1.0)
            assert np.all((time > 0) & (time <= 1.0))

    def test_composite_columns_derived_rowwise(self, lung_trial):
        np.testing.assert_array_equal(
            lung_trial.time_ce, np.minimum(lung_trial.time_e1, lung_trial.time_e2)
        )
        np.testing.assert_array_equal(
            lung_trial.status_ce, np.maximum(lung_trial.status_e1, lung_trial.status_e2)
        )

    def test_deterministic_given_seed(self, lung_design, lung_trial):
        again = simulate_tte(lung_design, 1000, seed=12345)
        for name, col in lung_trial.columns().items():
            np.testing.assert_array_equal(col, again.columns()[name])

    def test_different_seed_differs(self, lung_design, lung_trial):
        other = simulate_tte(lung_design, 1000, seed=54321)
        assert not np.array_equal(other.time_e1, lung_trial.time_e1)

    def test_csv_header_and_shape(self, lung_trial):
        text = lung_trial.to_csv()
        lines = text.strip().splitlines()
        assert lines[0] == "time_e1,status_e1,time_e2,status_e2,time_ce,status_ce,treated"
        assert len(lines) == 2001
        first = lines[1].split(",")
        assert first[-1] == "0"

    def test_csv_file_roundtrip(self, lung_trial, tmp_path):
        path = tmp_path / "trial.csv"
        lung_trial.to_csv(str(path))
        back = np.genfromtxt(path, delimiter=",", names=True)
        np.testing.assert_allclose(back["time_e1"], lung_trial.time_e1, rtol=1e-12)

    def test_sample_size_validation(self, lung_design):
        with pytest.raises(DomainError):
            simulate_tte(lung_design, 0, seed=1)


class TestTimeToEventLawAgreement:
    def test_control_arm_event_proportions(self, lung_design):
        law = calibrate(lung_design)
        trial = simulate_tte(lung_design, 100_000, seed=7, law=law)
        control = trial.treated == 0
        assert np.mean(trial.status_e1[control]) == pytest.approx(0.59, abs=5e-3)
        assert np.mean(trial.status_ce[control]) == pytest.approx(
            law.prob_composite(False), abs=5e-3
        )
        treated = ~control
        assert np.mean(trial.status_ce[treated]) == pytest.approx(
            law.prob_composite(True), abs=5e-3
        )

    def test_uncensored_composite_times_match_law(self, lung_design):
        law = calibrate(lung_design)
        trial = simulate_tte(lung_design, 100_000, seed=11, law=law)
        control = trial.treated == 0
        events = control & (trial.status_ce == 1)
        p_tau = law.prob_composite(False)

        def conditional_cdf(t):
            return (1.0 - np.asarray(law.control.survival(t))) / p_tau

        assert ks_pvalue_against(trial.time_ce[events], conditional_cdf) > 0.01


class TestBinarySimulation:
    def test_independent_union_rate(self):
        design = BinaryDesign(p0_e1=0.3, p0_e2=0.2, eff_e1=-0.05, eff_e2=-0.02,
                              rho=0.0)
        trial = simulate_cbe(design, 100_000, seed=3)
        control = trial.treated == 0
        assert np.mean(trial.ce[control]) == pytest.approx(0.44, abs=5e-3)

    def test_comonotone_components_coincide(self):
        design = BinaryDesign(p0_e1=0.3, p0_e2=0.3, eff_e1=-0.05, eff_e2=-0.05,
                              rho=1.0)
        trial = simulate_cbe(design, 20_000, seed=5)
        np.testing.assert_array_equal(trial.e1, trial.e2)

    def test_empirical_correlation(self):
        design = BinaryDesign(p0_e1=0.35, p0_e2=0.25, eff_e1=-0.05, eff_e2=-0.02,
                              rho=0.4)
        trial = simulate_cbe(design, 100_000, seed=9)
        control = trial.treated == 0
        observed = np.corrcoef(trial.e1[control], trial.e2[control])[0, 1]
        assert observed == pytest.approx(0.4, abs=0.01)

    def test_composite_is_union(self):
        design = BinaryDesign(p0_e1=0.3, p0_e2=0.2, eff_e1=-0.05, eff_e2=-0.02,
                              rho=0.1)
        trial = simulate_cbe(design, 5000, seed=13)
        np.testing.assert_array_equal(trial.ce, np.maximum(trial.e1, trial.e2))

    def test_csv_header(self):
        design = BinaryDesign(p0_e1=0.3, p0_e2=0.2, eff_e1=-0.05, eff_e2=-0.02,
                              rho=0.0)
        text = simulate_cbe(design, 10, seed=1).to_csv()
        assert text.splitlines()[0] == "e1,e2,ce,treated"

    def test_deterministic(self):
        design = BinaryDesign(p0_e1=0.3, p0_e2=0.2, eff_e1=-0.05, eff_e2=-0.02,
                              rho=0.0)
        a = simulate_cbe(design, 500, seed=21)
        b = simulate_cbe(design, 500, seed=21)
        np.testing.assert_array_equal(a.ce, b.ce)
