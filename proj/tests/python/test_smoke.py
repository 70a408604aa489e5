"""Smoke tests for the python bindings: the heavy lifting is exercised in the
C++ suite, so these just confirm the module loads and round-trips JSON."""

import pytest

charkern = pytest.importorskip("charkern")


def test_presets_registry():
    names = {p["name"] for p in charkern.presets()}
    assert {"heisenberg-3", "cyclic-9", "ut4-3"} <= names


def test_analyze_cyclic():
    rep = charkern.analyze({"kind": "cyclic", "n": 9})
    assert rep["order"] == 9
    assert rep["abelian"] is True
    assert rep["kernels"]["sk"] == [1, 3, 9]
    assert rep["kernels"]["skn"] == []


def test_analyze_preset():
    rep = charkern.analyze({"kind": "preset", "name": "heisenberg-3"})
    assert rep["order"] == 27
    assert rep["degrees"] == {"1": 9, "3": 2}
    assert rep["predicates"]["strong_condition"] is True


def test_character_table_shape():
    tab = charkern.character_table({"kind": "preset", "name": "q8"})
    assert len(tab["rows"]) == len(tab["classes"]) == 5
    degrees = sorted(r["degree"] for r in tab["rows"])
    assert degrees == [1, 1, 1, 1, 2]


def test_claim_ids():
    ids = charkern.claim_ids()
    assert len(ids) == 23
    assert ids[0] == "L2.2"
    assert "T-MAIN" in ids


def test_verify_subset():
    entries = [
        {"name": "h3", "spec": {"kind": "preset", "name": "heisenberg-3"}},
        {"name": "e27", "spec": {"kind": "preset", "name": "extraspecial-27-exp9"}},
    ]
    res = charkern.verify(entries, claims=["L2.4", "L2.15", "T-MAIN"])
    assert res["in_scope_fail"] is False
    assert res["summary"]["L2.4"]["pass"] == 2
    assert res["summary"]["L2.15"]["fail"] == 0
    assert not res["errors"]


def test_search_whole_group():
    res = charkern.search({"kind": "preset", "name": "heisenberg-3"}, order=27)
    assert res["count"] == 1
    entry = res["entries"][0]
    assert "search-result" in entry["tags"]
    # the found spec is concrete and analyzable on its own
    rep = charkern.analyze(entry["spec"])
    assert rep["order"] == 27
