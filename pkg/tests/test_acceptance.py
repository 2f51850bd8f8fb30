"""Acceptance suite: one test per release criterion, at its stated bound.

Each test prints a PASS/FAIL line via the terminal summary in conftest.py.
These tests run fresh enumerations on purpose (no session-scoped caches),
because run time is part of what they check.
"""

import time

from mutanta import (
    catalan,
    commutation_report,
    enumerate_mutation_class,
    enumerate_triangulations,
    lemma_report,
    mutation_class_count,
    orbit_statistics,
    structural_report,
    verify_rotation_bijection,
)
from mutanta.cli import main as cli_main

TABLE = [1, 4, 6, 19, 49, 150, 442, 1424, 4522, 14924]  # ranks 2..11


def test_class_counts_by_formula_under_one_second():
    start = time.perf_counter()
    values = [mutation_class_count(n) for n in range(2, 12)]
    elapsed = time.perf_counter() - start
    assert values == TABLE
    assert elapsed < 1.0, f"formula evaluation took {elapsed:.3f}s"


def test_class_counts_by_bfs_with_time_budget():
    for n, expected in zip(range(2, 11), TABLE):
        assert len(enumerate_mutation_class(n).members) == expected, f"n={n}"
    start = time.perf_counter()
    catalog = enumerate_mutation_class(11)
    elapsed = time.perf_counter() - start
    assert len(catalog.members) == 14924
    assert elapsed < 120.0, f"rank-11 search took {elapsed:.1f}s"


def test_rotation_bijection_ranks_2_to_8():
    for n in range(2, 9):
        report = verify_rotation_bijection(n)
        assert report.ok, report.to_text()
        counts = report.counts
        assert counts["rotation_classes"] == counts["mutation_class"] == counts["formula"]


def test_flip_mutation_commutation_polygons_up_to_10():
    for m in range(4, 11):
        report = commutation_report(m - 3)
        assert report.ok, report.to_text()
        assert report.counts["flips_checked"] == catalan(m - 2) * (m - 3)


def test_triangulation_counts_match_catalan():
    for m in range(4, 13):
        assert len(enumerate_triangulations(m).members) == catalan(m - 2), f"m={m}"


def test_orbit_size_propositions_ranks_2_to_9():
    for n in range(2, 10):
        m = n + 3
        histogram = orbit_statistics(m)
        for size in histogram:
            assert m % size == 0, f"orbit size {size} does not divide {m}"
            assert 2 <= size <= m
    for n in (2, 4, 8):  # prime polygon sizes 5, 7, 11
        m = n + 3
        histogram = orbit_statistics(m)
        assert set(histogram) == {m}
        assert mutation_class_count(n) * m == catalan(n + 1)


def test_close_to_border_suites_polygons_up_to_9():
    for m in range(4, 10):
        report = lemma_report(m - 3)
        assert report.ok, report.to_text()


def test_structural_facts_ranks_2_to_9():
    for n in range(2, 10):
        report = structural_report(n)
        assert report.ok, report.to_text()


def test_export_determinism_across_runs_and_workers(tmp_path):
    outputs = []
    for name, jobs in (("first", "1"), ("second", "1"), ("parallel", "4")):
        path = tmp_path / f"{name}.jsonl"
        code = cli_main([
            "export", "6", "--format", "jsonl", "--out", str(path), "--jobs", jobs,
        ])
        assert code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1] == outputs[2]
    dots = []
    for name, jobs in (("first", "1"), ("parallel", "4")):
        path = tmp_path / f"{name}.dot"
        code = cli_main([
            "export", "6", "--format", "dot", "--out", str(path), "--jobs", jobs,
        ])
        assert code == 0
        dots.append(path.read_bytes())
    assert dots[0] == dots[1]
