import json
import time

import pytest

import slsheets.verify as verify
from slsheets.closure import GuardLimitError
from slsheets.matrices import InvariantFactorProfile, gcd_minor_profile
from slsheets.poly import T


def test_manifest_fully_covered():
    assert verify.covered_invariants() == set(verify.MANIFEST)


def test_small_suite_passes_fast():
    start = time.perf_counter()
    report = verify.run_suite(n_max=2, seed=0, samples=5)
    assert time.perf_counter() - start < 1
    assert report.passed, report.failures()


def test_deterministic_for_fixed_seed():
    a = verify.run_suite(n_max=3, seed=7, samples=3).to_json(include_elapsed=False)
    b = verify.run_suite(n_max=3, seed=7, samples=3).to_json(include_elapsed=False)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_cases_sorted_and_named():
    report = verify.run_suite(n_max=2, seed=1, samples=2)
    names = [c.name for c in report.cases]
    assert names == sorted(names)
    assert all(c.invariant in verify.MANIFEST for c in report.cases)


def test_corrupted_tower_is_caught(monkeypatch):
    def broken(x, *args, **kwargs):
        p = gcd_minor_profile(x, *args, **kwargs)
        # multiply q_1 by t: still monic, but no longer matches Q_1 / Q_2
        return InvariantFactorProfile(p.n, p.Q, (p.q[0] * T,) + p.q[1:])

    monkeypatch.setattr(verify, "gcd_minor_profile", broken)
    report = verify.run_suite(n_max=3, seed=0, samples=2, only="minor-gcd/tower")
    assert not report.passed
    fails = report.failures()
    assert fails and all(c.witness is not None for c in fails)
    assert all(c.invariant == "minor-gcd/tower" for c in fails)


def test_only_filter():
    report = verify.run_suite(n_max=3, seed=0, samples=2, only="closure/")
    assert report.cases and all(c.name.startswith("closure/") for c in report.cases)


def test_guards():
    with pytest.raises(GuardLimitError):
        verify.run_suite(n_max=6)
    with pytest.raises(ValueError):
        verify.run_suite(n_max=2, samples=0)
