"""Randomized structural checks, drawn from pools of enumerated words."""

import hypothesis.strategies as st
from hypothesis import given, settings

from tropicone.rootsystem import (
    CartanType,
    RootVec,
    WeightVec,
    cartan_matrix,
    reflect,
    reflect_root,
)
from tropicone.wordtools import enumerate_w0_words, j_minus, j_plus
from tropicone.monomial import ExponentVec, a_monomial
from tropicone.decograph import build_graph, verify_graph
from tropicone.stringcone import string_cone, weight_census

CDS = [cartan_matrix(CartanType.parse(name)) for name in ("A3", "B3", "C3", "D4", "G2", "F4")]
WORD_POOL = [
    (cd, w)
    for cd in (cartan_matrix(CartanType.parse(n)) for n in ("A3", "B3", "C3"))
    for w in enumerate_w0_words(cd)
]


@st.composite
def cd_and_weight(draw):
    cd = draw(st.sampled_from(CDS))
    coords = draw(st.lists(st.integers(-4, 4), min_size=cd.n, max_size=cd.n))
    return cd, WeightVec(tuple(coords)), draw(st.integers(1, cd.n))


@given(cd_and_weight())
def test_reflect_is_an_involution(args):
    cd, lam, j = args
    assert reflect(cd, j, reflect(cd, j, lam)) == lam
    assert reflect(cd, j, lam).pairing(j) == -lam.pairing(j)


@st.composite
def cd_and_root_vec(draw):
    cd = draw(st.sampled_from(CDS))
    coords = draw(st.lists(st.integers(-4, 4), min_size=cd.n, max_size=cd.n))
    return cd, RootVec(tuple(coords)), draw(st.integers(1, cd.n))


@given(cd_and_root_vec())
def test_reflect_root_is_an_involution(args):
    cd, beta, j = args
    assert reflect_root(cd, j, reflect_root(cd, j, beta)) == beta


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=12))
def test_mul_div_roundtrip(pairs):
    x = ExponentVec(tuple(p[0] for p in pairs))
    y = ExponentVec(tuple(p[1] for p in pairs))
    assert (x * y) / y == x
    assert (x / y) * y == x


@st.composite
def word_and_position(draw):
    cd, w = draw(st.sampled_from(WORD_POOL))
    repeating = [j for j in range(1, w.N + 1) if j_plus(w, j) <= w.N]
    return cd, w, draw(st.sampled_from(repeating))


@given(word_and_position())
def test_a_monomial_shape(args):
    cd, w, j = args
    jp = j_plus(w, j)
    a = a_monomial(cd, w, j)
    assert a.exp(j) == 1 and a.exp(jp) == 1
    assert all(a.exp(l) <= 0 for l in range(j + 1, jp))
    assert all(a.exp(l) == 0 for l in list(range(1, j)) + list(range(jp + 1, w.N + 1)))


@given(word_and_position())
def test_j_plus_and_j_minus_invert(args):
    _, w, j = args
    assert j_minus(w, j_plus(w, j)) == j
    if j_minus(w, j) >= 1:
        assert j_plus(w, j_minus(w, j)) == j


@st.composite
def word_and_index(draw):
    cd, w = draw(st.sampled_from(WORD_POOL))
    return cd, w, draw(st.integers(1, cd.n))


@settings(max_examples=25, deadline=None)
@given(word_and_index())
def test_graph_invariants_hold(args):
    cd, w, i = args
    report = verify_graph(build_graph(cd, w, i))
    assert report["status"] == "pass", report


@settings(max_examples=10, deadline=None)
@given(st.sampled_from(WORD_POOL))
def test_census_of_zero_weight_is_one(pair):
    cd, w = pair
    cone = string_cone(cd, w)
    assert weight_census(cone, (0,) * cd.n) == 1
