import csv
import os
from fractions import Fraction

import numpy as np
import pytest

from algorithms.common_greedy import CommonGreedyConfig, run_common_greedy
from algorithms.guarantees import Verdict
from algorithms.replimit_greedy import RepLimitConfig, run_replimit_greedy
from bruteforce.exact import exact_optimum
from config.settings import CSV_HEADER, Settings, get_logger, load_settings
from errors import InputError
from harness.suites import SUITES, SuiteReport, greedy_within_diverse_optimum, random_matroid, run_suite, run_suites
from matroids.operations import rank_of
from matroids.oracles import UniformMatroid
from objectives.oracles import ModularObjective


@pytest.mark.parametrize(
    "name, trials",
    [
        ("uniform_exact", 20),
        ("diversity_bound", 5),
        ("objective", 8),
        ("running_diversity", 12),
        ("bound_properties", 10),
    ],
)
def test_suites_pass_on_small_trial_counts(name, trials):
    report = run_suite(name, trials=trials, seed=3)
    assert report.checked > 0
    assert report.passed, report.violations[:3]


def test_fixture_suite_passes():
    report = run_suite("fixtures")
    assert report.passed, report.violations[:3]


def test_run_suites_defaults_to_every_suite():
    reports = run_suites(["uniform_exact", "running_diversity"], trials=2, seed=0)
    assert [r.name for r in reports] == ["uniform_exact", "running_diversity"]
    assert set(SUITES) == {"uniform_exact", "diversity_bound", "objective", "running_diversity", "fixtures", "bound_properties"}


def test_unknown_suite():
    with pytest.raises(InputError):
        run_suite("nonsense")


def test_suite_report_collects_violations():
    report = SuiteReport("demo")
    report.check(True, trial=0)
    report.check(Verdict(False, "running_ss", {"step": 2}), trial=1)
    assert report.checked == 2
    assert not report.passed
    assert report.violations == [{"check": "running_ss", "trial": 1, "step": 2}]
    assert report.summary()["violations"] == 1


def test_same_seed_same_report():
    first = run_suite("uniform_exact", trials=5, seed=11)
    second = run_suite("uniform_exact", trials=5, seed=11)
    assert (first.checked, first.violations) == (second.checked, second.violations)


def test_replimit_output_against_diverse_optimum():
    f = ModularObjective([4, 3, 2, 1])
    C = UniformMatroid(4, 2)
    P, _ = run_replimit_greedy(f, C, RepLimitConfig(r=2, l=1))
    ok, details = greedy_within_diverse_optimum(f, C, P, 7, 2)
    assert ok
    assert details == {"alpha": Fraction(6, 7), "ss": 2, "best": 2}


@pytest.mark.parametrize("kind", ["uniform", "partition", "binary"])
def test_greedy_outputs_never_beat_the_diverse_optimum(kind):
    rng = np.random.default_rng(5)
    for _ in range(6):
        n = int(rng.integers(3, 7))
        M = random_matroid(rng, n, kind)
        f = ModularObjective([int(w) for w in rng.integers(1, 10, size=n)])
        r = int(rng.integers(2, 4))
        opt, _ = exact_optimum(f, M)
        b = int(rng.integers(0, rank_of(M, range(n))))
        l = int(rng.integers(1, r))
        for P, _ in (run_common_greedy(f, M, CommonGreedyConfig(b=b, r=r)), run_replimit_greedy(f, M, RepLimitConfig(r=r, l=l))):
            ok, details = greedy_within_diverse_optimum(f, M, P, opt, r)
            assert ok, details


@pytest.mark.slow
@pytest.mark.skipif(os.getenv("DIVERSE_RUN_SLOW") != "1", reason="set DIVERSE_RUN_SLOW=1 for full trial counts")
def test_full_suites():
    assert all(report.passed for report in run_suites())


def test_settings_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("DIVERSE_LOG_DIR", str(tmp_path))
    monkeypatch.setenv("DIVERSE_SWEEP_WORKERS", "2")
    monkeypatch.setenv("DIVERSE_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.log_dir == str(tmp_path)
    assert settings.sweep_workers == 2
    assert settings.log_level == "DEBUG"


@pytest.mark.parametrize("value", ["abc", "0", "-3"])
def test_settings_reject_bad_integers(monkeypatch, value):
    monkeypatch.setenv("DIVERSE_MAX_GROUND", value)
    with pytest.raises(InputError):
        load_settings()


def test_csv_log_rows_are_quoted(tmp_path):
    settings = Settings(log_dir=str(tmp_path), log_file="test_log.csv")
    logger = get_logger("tests.csv_log", settings)
    try:
        logger.info('weights "4,3,2,1", r=2')
        with open(settings.log_path, encoding="utf-8", newline="") as f:
            text = f.read()
        assert text.startswith(CSV_HEADER)
        rows = list(csv.reader(text.splitlines()[1:]))
        assert rows[-1][1:] == ["tests.csv_log", "INFO", 'weights "4,3,2,1", r=2']
    finally:
        for handler in list(logger.handlers):
            handler.close()
            logger.removeHandler(handler)
