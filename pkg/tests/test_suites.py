import time

import pytest

from relmin.errors import MalformedInputError
from relmin.verify.suites import PropertySuites, Suite, VerifyConfig, render_report, run_verify


def by_name(report):
    return {p["name"]: p for p in report["properties"]}


def failing(report):
    return [p["name"] for p in report["properties"] if p["failed"]]


@pytest.mark.parametrize("level", [0, 1, 2, 3])
def test_cd_axioms_hold_up_to_octonions(level):
    report = run_verify(VerifyConfig(Suite.CD_AXIOMS, samples=25, level=level))
    assert failing(report) == []
    assert report["exit"] == 0
    props = by_name(report)
    assert ("associativity" in props) == (level <= 2)
    assert ("commutativity" in props) == (level <= 1)
    if level == 3:
        assert props["associator_counterexample"]["witness"]


def test_sedenions_break_composition():
    report = run_verify(VerifyConfig(Suite.CD_AXIOMS, samples=10, level=4))
    assert report["exit"] == 1
    composition = by_name(report)["composition"]
    assert composition["failed"] == 1
    example = composition["counterexample"]
    assert example["abs_sq_product"] != example["product_of_abs_sq"]
    assert "alternativity_counterexample" not in failing(report)


def test_abs_axioms():
    report = run_verify(VerifyConfig(Suite.ABS_AXIOMS, samples=30, level=2))
    props = by_name(report)
    assert report["exit"] == 0
    assert props["euclidean_cd(2).archimedean_witness"]["witness"] == {"n0": 2}
    for p in (2, 3, 5):
        assert f"padic({p}).non_archimedean" in props


@pytest.mark.parametrize("level,dim", [(0, 3), (2, 2), (3, 1)])
def test_heisenberg_axioms(level, dim):
    report = run_verify(VerifyConfig(Suite.HEISENBERG_AXIOMS, samples=20, level=level, dim=dim))
    assert failing(report) == []
    assert "fx.E_cross_F_not_closed" in by_name(report)


def test_matrix_realization_needs_fx_over_quaternions():
    report = run_verify(VerifyConfig(Suite.MATRIX_REALIZATION, samples=20, level=2))
    props = by_name(report)
    assert report["exit"] == 0
    assert "fx.homomorphism" in props
    assert "xf.homomorphism" not in props
    assert props["xf.e_f_support"]["failed"] == 0
    assert props["fx.e_f_support"]["checked"] == 20
    witness = props["xf.homomorphism_counterexample"]["witness"]
    assert witness["realized_product_corner"] != witness["matrix_product_corner"]


def test_matrix_realization_commutative():
    report = run_verify(VerifyConfig(Suite.MATRIX_REALIZATION, samples=20, level=1, dim=3))
    assert failing(report) == []
    assert "xf.homomorphism" in by_name(report)


def test_reduction_iso():
    report = run_verify(VerifyConfig(Suite.REDUCTION_ISO, samples=6))
    assert failing(report) == []
    props = by_name(report)
    assert props["excluded_corner_rejected"]["checked"] == 6
    assert props["corner_inverse"]["checked"] == props["corner_closure"]["checked"]
    assert props["tilde_closure"]["checked"] == 6


@pytest.mark.parametrize("level", [0, 2])
def test_witnesses(level):
    report = run_verify(VerifyConfig(Suite.WITNESSES, samples=10, level=level, dim=2))
    assert failing(report) == []
    props = by_name(report)
    assert props["escalation_bound"]["checked"] == 21
    assert props["shrink_contract"]["checked"] == 21 * 20


def test_reports_are_deterministic():
    config = VerifyConfig(Suite.HEISENBERG_AXIOMS, samples=8, seed=42, level=1)
    assert render_report(run_verify(config)) == render_report(run_verify(config))
    other = VerifyConfig(Suite.CD_AXIOMS, samples=8, seed=7)
    assert PropertySuites(other).sampler.cd(2) == PropertySuites(other).sampler.cd(2)


@pytest.mark.parametrize("kwargs", [
    {"suite": "nope"},
    {"suite": "cd_axioms", "samples": 0},
    {"suite": "cd_axioms", "seed": -1},
    {"suite": "cd_axioms", "seed": 2 ** 64},
    {"suite": "cd_axioms", "level": 5},
    {"suite": "heisenberg_axioms", "level": 4},
    {"suite": "reduction_iso", "level": 1},
    {"suite": "heisenberg_axioms", "dim": 0},
    {"suite": "cd_axioms", "coeff_magnitude": 0},
    {"suite": "cd_axioms", "samples": True},
])
def test_config_validation(kwargs):
    with pytest.raises(MalformedInputError):
        VerifyConfig(**kwargs)


def test_report_shape():
    report = run_verify(VerifyConfig("abs_axioms", samples=3))
    assert report["suite"] == "abs_axioms"
    assert report["config"]["samples"] == 3
    for prop in report["properties"]:
        assert set(prop) >= {"name", "checked", "failed", "counterexample"}


def test_octonion_heisenberg_suite_runs_within_budget():
    start = time.perf_counter()
    report = run_verify(VerifyConfig(Suite.HEISENBERG_AXIOMS, samples=200, level=3, dim=4, seed=7))
    elapsed = time.perf_counter() - start
    assert report["exit"] == 0
    assert elapsed < 15
