import json

import pytest

from tropicone.monomial import ExponentVec
from tropicone.wordtools import validate_word
from tropicone.stringcone import (
    contains,
    dual_kostant_count,
    half_potential_monomials,
    render,
    string_cone,
    to_json_dict,
    weight_census,
)

import fixture_data as fx
from fixture_data import ev


def test_half_potential_monomials_c3(c3, c3_word):
    mons = half_potential_monomials(c3, c3_word)
    assert set(mons) == {1, 2, 3}
    assert mons[1] == [ExponentVec.unit(9, 9)]
    assert mons[3] == [ExponentVec.unit(9, 8)]
    assert mons[2][0] == ExponentVec.unit(9, 1)
    assert set(mons[2]) == {ev(9, m) for m, _ in fx.C3_VERTICES}


def test_string_cone_c3_rows(c3, c3_word):
    cone = string_cone(c3, c3_word)
    assert cone.N == 9
    assert list(cone.rows) == [(i, ev(9, m)) for i, m in fx.C3_CONE_ROWS]


def test_string_cone_c3_text(c3, c3_word):
    assert render(string_cone(c3, c3_word), "text") == fx.C3_CONE_TEXT


def test_string_cone_d4(d4, d4_word):
    cone = string_cone(d4, d4_word)
    assert len(cone.rows) == 25
    by_i = {}
    for i, row in cone.rows:
        by_i.setdefault(i, []).append(row)
    assert by_i[1] == [ev(12, m) for _, m in fx.D4_EXTRA_ROWS[:2]]
    assert by_i[3] == [ev(12, {11: 1})]
    assert by_i[4] == [ev(12, {12: 1})]
    assert set(by_i[2]) == {ev(12, m) for m in fx.D4_MONOMIALS.values()}
    # ordered by index, each block contiguous
    assert [i for i, _ in cone.rows] == sorted(i for i, _ in cone.rows)


def test_contains(c3, c3_word):
    cone = string_cone(c3, c3_word)
    assert contains(cone, (0,) * 9)
    assert contains(cone, tuple(ExponentVec.unit(9, 1).d))
    assert not contains(cone, tuple((-ExponentVec.unit(9, 9).d[l]) for l in range(9)))
    # t_2/t_3 as a point: row z_2 - z_3 gives 2 >= 0, but z_3 >= ... rows fail
    assert not contains(cone, (0, 0, -1, 0, 0, 0, 0, 0, 0))


def test_census_zero_weight(c3, c3_word):
    cone = string_cone(c3, c3_word)
    assert weight_census(cone, (0, 0, 0)) == 1


def test_census_matches_partition_count(c3, c3_word):
    cone = string_cone(c3, c3_word)
    for mvec in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1), (2, 1, 0)]:
        assert weight_census(cone, mvec) == dual_kostant_count(c3, mvec)


def test_census_is_word_independent(c3, c3_word):
    alt = string_cone(c3, validate_word(c3, fx.C3_WORD_ALT))
    cone = string_cone(c3, c3_word)
    for mvec in [(1, 1, 0), (1, 1, 1), (0, 2, 1)]:
        assert weight_census(cone, mvec) == weight_census(alt, mvec)


def test_dual_kostant_small_values(c3):
    assert dual_kostant_count(c3, (0, 0, 0)) == 1
    assert dual_kostant_count(c3, (1, 0, 0)) == 1
    assert dual_kostant_count(c3, (2, 0, 0)) == 1
    # alpha_1 + alpha_2 of the dual matrix is a root, so two partitions
    assert dual_kostant_count(c3, (1, 1, 0)) == 2


def test_render_latex_and_json(c3, c3_word):
    cone = string_cone(c3, c3_word)
    tex = render(cone, "latex")
    assert tex.startswith("\\begin{align*}\n")
    assert tex.count("\\geq 0") == 14
    doc = json.loads(render(cone, "json"))
    assert doc == to_json_dict(cone)
    assert doc["type"] == "C3" and len(doc["rows"]) == 14
    assert doc["rows"][0] == {"i": 1, "coeffs": [0, 0, 0, 0, 0, 0, 0, 0, 1]}
    with pytest.raises(ValueError):
        render(cone, "html")
