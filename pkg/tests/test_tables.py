import json

import pytest

from dyndeg import tables

FAST = ["A.1", "A.2", "A.3", "A.4", "A.6", "A.8", "A.9", "A.10", "A.11", "A.12", "A.13", "A.14",
        "A.15", "A.16", "A.17"]


@pytest.fixture(scope="module")
def computed():
    return {}


def _table(cache, tid):
    if tid not in cache:
        cache[tid] = tables.compute_table(tid)
    return cache[tid]


@pytest.mark.parametrize("tid", FAST)
def test_table_matches_printed(computed, tid):
    n, disc = tables.compare_table(_table(computed, tid))
    assert n == len(tables.expected_rows(tid))
    assert [d for d in disc if not d.suspected_typo] == []
    assert all(d.suspected_typo for d in disc)


def test_A10_octic_misprint_is_flagged(computed):
    _, disc = tables.compare_table(_table(computed, "A.10"))
    assert [d.id for d in disc] == ["A.10 row 6"]


def test_A5_only_duplicate_label_differs():
    _, disc = tables.compare_table(tables.compute_table("A.5"))
    assert [(d.id, d.suspected_typo) for d in disc] == [("A.5 row 22", True)]


def test_render_formats(computed):
    t = _table(computed, "A.1")
    tsv = t.render("tsv").splitlines()
    assert tsv[0].split("\t") == list(t.headers) and len(tsv) == len(t.rows) + 1
    assert t.render("md").startswith("| index |")
    assert json.loads(t.render("json"))["id"] == "A.1"
    with pytest.raises(ValueError):
        t.render("csv")


def test_unknown_table():
    with pytest.raises(ValueError):
        tables.compute_table("A.18")
