import json

import jsonschema
import pytest

from flagloop.exactmat import AbelianGroupStructure, rank_mod_p
from flagloop.specseq import PageCoordinate, image_matrix
from flagloop.symquot import su_basis
from flagloop.torsion import (bottom_row_group, cross_check, e3_entry, e3_entry_mod_p,
                              last_column_group, prequotient_free_rank, rational_rank,
                              reduced_matrix, torsion_table)

from tables import REFERENCE, SU5_MOD5, mismatches, mod_mismatches

SCHEMA = {
    "type": "object",
    "required": ["n", "family", "mode", "rows"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer"},
        "family": {"const": "SU"},
        "mode": {"enum": ["integral", "mod-p"]},
        "p": {"type": "integer"},
        "rows": {"type": "array", "items": {
            "type": "object",
            "required": ["missing", "cells"],
            "additionalProperties": False,
            "properties": {
                "missing": {"oneOf": [{"type": "integer"}, {"const": "bottom"}]},
                "cells": {"type": "array", "items": {
                    "type": "object",
                    "required": ["degree", "free_rank", "invariant_factors", "status"],
                    "additionalProperties": False,
                    "properties": {
                        "degree": {"type": "integer"},
                        "free_rank": {"type": "integer"},
                        "invariant_factors": {"type": "array", "items": {"type": "integer"}},
                        "status": {"enum": ["ok", "unknown"]},
                    }}},
            }}},
    },
}


def G(r, *f):
    return AbelianGroupStructure(r, f)


def test_entry_examples():
    assert e3_entry(PageCoordinate(2, 2, 1)) == G(2, 3)
    assert e3_entry(PageCoordinate(2, 0, 1)) == G(2)
    # the mixed 2/4 torsion sits in the row with one y missing
    assert e3_entry(PageCoordinate(3, 3, 1)) == G(6, 2, 4)


def test_mod_p_examples():
    assert e3_entry_mod_p(PageCoordinate(4, 4, 2), 5).multiplicity == 1
    assert e3_entry_mod_p(PageCoordinate(4, 6, 1), 5).multiplicity == 2
    assert e3_entry_mod_p(PageCoordinate(2, 2, 1), 5).multiplicity == 0
    with pytest.raises(ValueError):
        e3_entry_mod_p(PageCoordinate(2, 2, 1), 4)


@pytest.mark.parametrize("n", [2, 3])
def test_reference_tables(n):
    assert mismatches(torsion_table(n), REFERENCE[n]) == []


def test_reference_table_n4():
    table = torsion_table(4)
    assert table.complete
    assert mismatches(table, REFERENCE[4]) == []


def test_mod5_table():
    assert mod_mismatches(torsion_table(4, p=5), SU5_MOD5) == []


@pytest.mark.parametrize("n", [2, 3])
def test_routes_agree(n):
    for y in range(n):
        for x in range(n * (n + 1) // 2 + 1):
            c = PageCoordinate(n, x, y)
            full = e3_entry(c, method="full")
            assert e3_entry(c, method="quotient") == full
            assert e3_entry(c, engine="pivot") == full
            for p in (2, 3):
                assert (e3_entry_mod_p(c, p, method="full")
                        == e3_entry_mod_p(c, p, method="quotient"))


@pytest.mark.parametrize("x, y", [(2, 1), (3, 2), (4, 3), (4, 1), (5, 2), (5, 1), (6, 1)])
def test_routes_agree_n4(x, y):
    c = PageCoordinate(4, x, y)
    assert e3_entry(c, method="full") == e3_entry(c)
    assert e3_entry_mod_p(c, 5, method="full") == e3_entry_mod_p(c, 5)


def test_reduced_matrix_shape():
    m = reduced_matrix(PageCoordinate(3, 2, 1))
    assert m.cols == 3 * len(su_basis(3)[2])
    assert m.rows == 3 * len(su_basis(3)[1])


def test_bottom_row_examples():
    assert bottom_row_group(2, 1) == G(0, 3)
    assert bottom_row_group(3, 2) == G(0, 2)
    assert bottom_row_group(5, 0) == G(1)


def test_last_column_examples():
    assert last_column_group(2, 1) == G(0, 3)
    assert last_column_group(3, 1) == G(0, 4)
    assert last_column_group(4, 2) == G(0)
    assert last_column_group(3, 0) == G(1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closed_forms_match_matrices(n):
    top = n * (n + 1) // 2
    for x in range(top + 1):
        assert e3_entry(PageCoordinate(n, x, 0)) == bottom_row_group(n, x)
    for y in range(n):
        assert e3_entry(PageCoordinate(n, top, y)) == last_column_group(n, n - y)


def test_prequotient_examples():
    assert prequotient_free_rank(2, 1, 1) == 3
    assert prequotient_free_rank(3, 1, 1) == 8
    assert prequotient_free_rank(2, 1, 0) == 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_prequotient_against_rank(n):
    for y in range(n):
        for x in range(n * (n + 1) // 2 + 1):
            m = image_matrix(PageCoordinate(n, x, y))
            assert m.cols - rational_rank(m) == prequotient_free_rank(n, n - y, x)


def test_truncated_sum_is_wrong():
    # stopping the alternating sum at k = n - j loses terms
    n, j, p = 3, 2, 2
    short = sum((-1) ** k * __import__("math").comb(n, j - k)
                * __import__("math").comb(n + p - k - 1, p - k) for k in range(0, n - j + 1))
    m = image_matrix(PageCoordinate(n, p, n - j))
    assert m.cols - rational_rank(m) == prequotient_free_rank(n, j, p) == 10 != short


@pytest.mark.parametrize("n", [2, 3])
def test_low_degree_free_ranks(n):
    table = torsion_table(n)
    for y in range(1, n):
        for x in range(2):
            assert table.cells[(y, x)].group.free_rank == prequotient_free_rank(n, n - y, x)


def test_rational_rank_matches_integral_rank():
    from flagloop.exactmat import snf_naive
    from flagloop.specseq import differential_matrix
    for y in range(3):
        for x in range(7):
            m = differential_matrix(PageCoordinate(3, x, y))
            assert rational_rank(m) == snf_naive(m).rank
            assert rank_mod_p(m, 2) <= rational_rank(m)


@pytest.mark.parametrize("n", [2, 3])
def test_cross_check(n):
    results = cross_check(n)
    assert results and all(r.passed for r in results), [r for r in results if not r.passed]


def test_palindrome_n3():
    table = torsion_table(3)
    mult = [table.cells[(1, x)].group.torsion_count(2) for x in range(1, 7)]
    assert mult == mult[::-1] == [0, 1, 2, 2, 1, 0]


@pytest.mark.parametrize("n, p", [(2, None), (3, None), (3, 2), (4, 5)])
def test_json_schema(n, p):
    doc = json.loads(torsion_table(n, p=p).to_json())
    jsonschema.validate(doc, SCHEMA)
    assert [r["missing"] for r in doc["rows"]] == list(range(n - 1, 0, -1)) + ["bottom"]
    assert doc["mode"] == ("integral" if p is None else "mod-p")
    assert ("p" in doc) == (p is not None)


def test_budget_marks_unknown():
    table = torsion_table(3, budget=1e-9)
    assert not table.complete
    assert "?" in table.to_text()
    doc = json.loads(table.to_json())
    jsonschema.validate(doc, SCHEMA)
    assert any(c["status"] == "unknown" for r in doc["rows"] for c in r["cells"])


def test_deterministic_output():
    a = torsion_table(3).to_text()
    assert a == torsion_table(3).to_text()
    assert torsion_table(3, p=2).to_json() == torsion_table(3, p=2).to_json()


def test_text_layout():
    lines = torsion_table(2).to_text().splitlines()
    assert lines[0] == "E3 page, SU(3)/T^2"
    assert lines[3].startswith("missing 1") and lines[4].startswith("bottom")
    assert "ℤ^2⊕ℤ_3" in lines[3]


def test_table_validation():
    with pytest.raises(ValueError):
        torsion_table(1)
    with pytest.raises(ValueError):
        torsion_table(2, p=6)
