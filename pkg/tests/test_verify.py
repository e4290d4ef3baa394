import json

import pytest

from shiftedpr import insertion, qsym, verify
from shiftedpr.combinat import union_shift
from shiftedpr.verify import SUITES, Check, VerifyConfig, clear_caches, run_suite

SMALL = VerifyConfig.capped(5)


@pytest.fixture
def fresh_caches():
    clear_caches()
    yield
    clear_caches()


def test_suite_registry():
    assert list(SUITES) == [
        "lemma-des", "sw-bijection", "sk-fibers", "right-ideal", "left-ideal-counterexample", "structure-maps",
        "pf-pro", "qk-kf-kf1", "dp-counts", "lr-shifted", "diagrams", "j-xi", "examples",
    ]


@pytest.mark.parametrize("name", list(SUITES))
def test_every_suite_passes_at_small_caps(name):
    rep = run_suite(name, SMALL)
    assert rep.passed, rep.to_text()
    assert all(c.count > 0 for c in rep.checks if "independent of T" not in c.name)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_config_caps():
    cfg = VerifyConfig.capped(6)
    assert (cfg.count_cap, cfg.class_cap, cfg.hopf_cap) == (6, 6, 5)
    cfg = VerifyConfig.capped(None)
    assert (cfg.class_cap, cfg.hopf_cap) == (7, 5)
    with pytest.raises(ValueError):
        VerifyConfig.capped(0)
    with pytest.raises(ValueError):
        VerifyConfig(workers=0)


def test_des_suite_count_at_four():
    rep = run_suite("lemma-des", VerifyConfig.capped(4))
    assert rep.check("des-Q_SW(w)=des(w)").count == 1 + 2 + 6 + 24


def test_reports_are_deterministic():
    cfg = VerifyConfig.capped(5, timing=False)
    a = json.dumps(run_suite("structure-maps", cfg).to_json())
    b = json.dumps(run_suite("structure-maps", cfg).to_json())
    assert a == b
    assert json.loads(a)["elapsed_ms"] == 0


def test_parallel_workers_agree():
    serial = run_suite("lemma-des", VerifyConfig.capped(7, timing=False))
    parallel = run_suite("lemma-des", VerifyConfig.capped(7, timing=False, workers=2))
    assert serial.to_json() == parallel.to_json()


def test_check_keeps_first_counterexample():
    c = Check("demo")
    c(True)
    c(False, {"first": 1})
    c(False, lambda: {"second": 2})
    assert c.status == "fail" and c.count == 3 and c.counterexample == {"first": 1}
    assert c.to_json()["counterexample"] == {"first": 1}


def test_report_json_schema():
    data = run_suite("examples", SMALL).to_json()
    assert set(data) == {"suite", "checks", "elapsed_ms"}
    assert set(data["checks"][0]) == {"name", "status", "count"}


# --- mutation meta-test: each seeded bug must be caught ---------------------------------


def _failing_suites(names, cfg=SMALL):
    return {n for n in names if not run_suite(n, cfg).passed}


def test_mutation_dropping_the_non_schensted_prime(monkeypatch, fresh_caches):
    real = insertion._sw_step

    def no_flag(rows, x):
        box, _ = real(rows, x)
        return box, False

    monkeypatch.setattr(insertion, "_sw_step", no_flag)
    failed = _failing_suites(["examples", "lemma-des", "sw-bijection"])
    assert failed
    rep = run_suite("examples", SMALL)
    bad = [c for c in rep.checks if c.failed]
    assert bad and bad[0].counterexample["word"] == "612543"


def test_mutation_peak_function_support(monkeypatch, fresh_caches):
    monkeypatch.setattr(qsym, "triangle", union_shift)
    assert _failing_suites(["qk-kf-kf1", "structure-maps", "diagrams"])
    rep = run_suite("qk-kf-kf1", SMALL)
    kf = rep.check("K_P M-form = F-form")
    assert kf.failed and "left_minus_right" in kf.counterexample


def test_mutation_without_sk3(monkeypatch, fresh_caches):
    monkeypatch.setattr(insertion, "shifted_knuth_neighbors", insertion.knuth_neighbors)
    rep = run_suite("sk-fibers", SMALL)
    c = rep.check("SK-class = P_SW-fiber")
    assert c.failed and c.counterexample["fiber_only"]


def test_caches_cleared_after_mutations():
    assert run_suite("examples", SMALL).passed
    assert verify.SUITES["examples"] is not None
