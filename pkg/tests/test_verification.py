import json

import pytest

from quadgroup.verification import (PENTAGON_TABLES, SweepReport,
                                    verify_center_candidates,
                                    verify_commutator_classes,
                                    verify_pentagon_tables, verify_relations)


def test_sweep_all_families_small_n():
    for n in (4, 5, 6):
        report = verify_relations(n)
        assert report.passed, report.failures[:5]
        assert report.checked > 0


def test_sweep_single_family():
    report = verify_relations(6, families=("involutive",))
    assert report.passed
    assert report.checked == 45


def test_sweep_json_schema():
    report = verify_relations(5)
    payload = json.loads(report.to_json())
    assert set(payload) == {"family", "n", "checked", "failures",
                            "passed", "seconds"}
    assert payload["n"] == 5 and payload["failures"] == []


def test_commutator_classes():
    for n in (6, 7):
        report = verify_commutator_classes(n)
        assert report.passed
        g = n * (n - 1) * (n - 2) * (n - 3) // 8
        assert report.checked == g * (g - 1)
    with pytest.raises(ValueError):
        verify_commutator_classes(5)


def test_center_candidates():
    report = verify_center_candidates(6)
    assert report.passed and report.checked > 0


def test_pentagon_tables_all_rows():
    assert len(PENTAGON_TABLES) == 12
    assert sum(len(rows) for _, rows in PENTAGON_TABLES) == 80
    report = verify_pentagon_tables()
    assert report.passed, report.failures[:5]
    # every row hit at least once
    assert report.checked >= 80


def test_pentagon_tables_other_seed_and_size():
    report = verify_pentagon_tables(n=9, samples=3, seed=12345)
    assert report.passed, report.failures[:5]
