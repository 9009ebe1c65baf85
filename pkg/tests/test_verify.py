import pytest

from config import PrecisionCfg, VerifyCfg
from core.errors import FixtureError
from core.types import Suite
from verify.suites import CHECKS, N4_SURFACE_MATRICES, load_suites, run_check, run_suite, suite_checks
from monodromy.diophantine import n4_constraints, n4_expected


@pytest.fixture
def small_cfg():
    return VerifyCfg(kmax=3, gmax=3, trials=5, precision=PrecisionCfg(bits=128, toleranceExp=25))


def test_every_suite_is_defined():
    suites = load_suites()
    assert {s.value for s in Suite} <= set(suites)


def test_all_expands_includes_without_duplicates():
    checks = suite_checks("all")
    assert len(checks) == len(set(checks))
    for suite in ("constraints", "quasi", "markov", "tables", "extras"):
        assert set(suite_checks(suite)) <= set(checks)


def test_every_named_check_is_registered():
    for name in suite_checks("all"):
        assert name in CHECKS


def test_unknown_suite():
    with pytest.raises(FixtureError):
        suite_checks("nightly")


def test_unknown_check(small_cfg, symbolic):
    with pytest.raises(FixtureError):
        run_check("no_such_check", small_cfg, symbolic)


def test_surface_matrices_satisfy_n4_constraints():
    for S in N4_SURFACE_MATRICES:
        assert n4_constraints(S) == n4_expected(2)


def test_markov_suite(small_cfg):
    report = run_suite(Suite.MARKOV, small_cfg)
    assert report.passed, report.to_json()
    assert [r.name for r in report.results] == ["markov_descent", "p_invariants", "n4_constraints"]


def test_tables_suite(small_cfg):
    report = run_suite(Suite.TABLES, small_cfg)
    assert report.passed, report.to_json()


def test_report_json(small_cfg):
    payload = run_suite(Suite.MARKOV, small_cfg).to_json()
    assert payload["suite"] == "markov"
    assert payload["pass"] is True
    assert {c["check"] for c in payload["checks"]} == {"markov_descent", "p_invariants", "n4_constraints"}


@pytest.mark.slow
@pytest.mark.parametrize("suite", [Suite.CONSTRAINTS, Suite.QUASI, Suite.EXTRAS])
def test_remaining_suites(small_cfg, suite):
    report = run_suite(suite, small_cfg)
    assert report.passed, report.to_json()


@pytest.fixture
def rank_cfg():
    return VerifyCfg(kmax=3, gmax=4, trials=2, precision=PrecisionCfg(bits=128, toleranceExp=25))


def test_grassmannian_checks_reach_the_top_rank(rank_cfg, symbolic):
    expected = {"2,3", "2,4", "3,4"}
    quasi = run_check("grassmannian_quasi", rank_cfg, symbolic)
    assert quasi.passed, quasi.detail
    assert expected <= set(quasi.detail)
    invariants = run_check("p_invariants", rank_cfg, symbolic)
    assert invariants.passed, invariants.detail
    assert expected <= set(invariants.detail["grassmannians"])
    lattice = run_check("mukai_lattice", rank_cfg, symbolic)
    assert lattice.passed, lattice.detail
    assert {"kapranov_2_3", "kapranov_2_4", "kapranov_3_4"} <= set(lattice.detail)


class _Report:
    def __init__(self, k, passed):
        self.k, self.passed = k, passed

    def to_json(self):
        return {"k": self.k, "pass": self.passed}


def test_odd_projective_failures_are_counted(monkeypatch, small_cfg, symbolic):
    monkeypatch.setattr("verify.suites.quasi_periodicity_check", lambda k: _Report(k, k != 3))
    result = run_check("projective_quasi", small_cfg, symbolic)
    assert not result.passed
    assert result.detail["3"]["status"] == "conjectural"
    assert result.detail["4"]["status"] == "proved"


def test_odd_grassmannian_failures_are_counted(monkeypatch, small_cfg, symbolic):
    monkeypatch.setattr("verify.suites.grass_quasi_periodicity", lambda r, k: _Report(k, k % 2 == 0))
    assert not run_check("grassmannian_quasi", small_cfg, symbolic).passed


def test_braid_laws_report(small_cfg, symbolic):
    result = run_check("braid_laws", small_cfg, symbolic)
    assert result.passed, result.detail
    assert result.detail == {"trials": small_cfg.trials, "failures": []}
