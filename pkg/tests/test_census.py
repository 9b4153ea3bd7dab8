from itertools import permutations, product

import pytest

from nimtriples import (
    CapExceeded,
    CensusReport,
    census,
    census_closed_form_check,
    classify_triangle,
    closed_form_counts,
)
from nimtriples.triangles import TriangleClass


def brute_counts(k):
    # independent route: count by direct per-triple classification
    flat = tight = loose = 0
    for a, b, c in product(range(1 << k), repeat=3):
        kind = classify_triangle(a, b, c).kind
        if kind is TriangleClass.FLAT:
            flat += 1
        elif kind is TriangleClass.TIGHT:
            tight += 1
        else:
            loose += 1
    return flat, tight, loose


def test_census_k1():
    report = census(1)
    assert (report.flat, report.tight, report.loose) == (4, 1, 3)
    assert report.total == 8


def test_census_k2():
    report = census(2)
    assert (report.flat, report.tight, report.loose) == (16, 12, 36)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_census_matches_per_triple_classification(k):
    report = census(k)
    assert report.counts == brute_counts(k)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_flat_count_is_fourth_power(k):
    assert census(k).flat == 4**k


@pytest.mark.parametrize("k", [1, 2, 3])
def test_closed_form(k):
    report = census(k)
    assert closed_form_counts(k) == report.counts
    assert census_closed_form_check(k)


def test_census_is_permutation_blind():
    # swapping side roles cannot change any count
    k = 2
    base = census(k).counts
    counts = {"flat": 0, "tight": 0, "loose": 0}
    for a, b, c in product(range(1 << k), repeat=3):
        kinds = {classify_triangle(*p).kind for p in permutations((a, b, c))}
        assert len(kinds) == 1
        counts[kinds.pop().value] += 1
    assert (counts["flat"], counts["tight"], counts["loose"]) == base


def test_census_rejects_k_zero():
    with pytest.raises(ValueError):
        census(0)


def test_census_cap():
    with pytest.raises(CapExceeded):
        census(8)
    with pytest.raises(CapExceeded):
        census(3, max_k=2)
    assert census(2, max_k=2).flat == 16


def test_census_cap_env_override(monkeypatch):
    monkeypatch.setenv("NIM_TRIPLE_MAX_K", "1")
    with pytest.raises(CapExceeded):
        census(2)
    assert census(1).flat == 4
    monkeypatch.setenv("NIM_TRIPLE_MAX_K", "banana")
    with pytest.raises(ValueError):
        census(1)


def test_report_to_line():
    report = census(1)
    assert report.to_line(timing=False) == "k=1 flat=4 tight=1 loose=3"
    timed = report.to_line(timing=True)
    assert timed.startswith("k=1 flat=4 tight=1 loose=3 ms=")


def test_report_as_dict():
    payload = census(1).as_dict(timing=False)
    assert payload == {"k": 1, "flat": 4, "tight": 1, "loose": 3}
    assert "ms" in census(1).as_dict(timing=True)


def test_report_rejects_bad_sum():
    with pytest.raises(ValueError):
        CensusReport(k=1, flat=4, tight=1, loose=4, elapsed_ms=0.0)
