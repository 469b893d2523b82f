import pytest
from hypothesis import given, settings, strategies as st

from elemvec import ratlin
from elemvec.checks import check_conic, distinct_signs, supp_size
from elemvec.errors import DimensionError, NotMemberError
from elemvec.ratlin import normalize_primitive
from elemvec.scone import (
    conformal_decompose,
    conformal_reduce,
    enumerate_evs,
    is_conformal_generating_superset,
    is_elementary,
    is_swnd,
    make_scone,
    scone_contains,
)
from elemvec.signs import conforms, sign_leq, sign_of

from cases import E1, E2, E3, F, flux_cone, pair_balance, vecq


def test_membership():
    K = flux_cone()
    assert scone_contains(K, vecq(*F))
    assert scone_contains(K, vecq(*E2))
    assert not scone_contains(K, vecq(-1, 0, 0, -1))
    with pytest.raises(DimensionError):
        scone_contains(K, vecq(1, 1))


def test_nonneg_index_out_of_range():
    with pytest.raises(IndexError):
        make_scone([[1, 1]], [2])


def test_block_permutation_puts_free_first():
    assert flux_cone().block_permutation() == (3, 0, 1, 2)


def test_conformal_reduce_examples():
    K = flux_cone()
    assert conformal_reduce(K, vecq(*F), vecq(*E3)) == (1, vecq(*E1))
    assert conformal_reduce(K, vecq(*F), vecq(*E1)) == (1, vecq(*E3))
    S = pair_balance(False)
    x = vecq(1, 2, 3, 4)
    lam, x2 = conformal_reduce(S, x, vecq(1, 1, 0, 0))
    assert lam == 1 and x2 == vecq(0, 1, 3, 4)
    assert sign_leq(sign_of(x2), sign_of(x)) and supp_size(x2) < supp_size(x)


def test_conformal_reduce_rejects_bad_input():
    K = flux_cone()
    with pytest.raises(ValueError):
        conformal_reduce(K, vecq(*E1), vecq(2, 0, 0, 2))
    with pytest.raises(ValueError):
        conformal_reduce(K, vecq(*E1), vecq(*E3))
    with pytest.raises(NotMemberError):
        conformal_reduce(K, vecq(-1, 0, 0, -1), vecq(*E1))


def test_is_elementary_examples():
    K = flux_cone()
    assert is_elementary(K, vecq(*E2))
    assert not is_elementary(K, vecq(*F))
    assert is_elementary(K, vecq(5, 0, 0, 5))
    assert not is_elementary(K, vecq(0, 0, 0, 0))


def test_enumerate_examples():
    assert set(enumerate_evs(flux_cone())) == {vecq(*E1), vecq(*E2), vecq(*E3)}
    assert set(enumerate_evs(pair_balance())) == {vecq(1, 1, 0, 0), vecq(1, 0, 1, 0), vecq(0, 1, 0, 1), vecq(0, 0, 1, 1)}
    rays = {(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, -1), (0, 1, -1, 0), (0, 1, 0, 1), (0, 0, 1, 1)}
    expected = {vecq(*v) for v in rays} | {vecq(*(-a for a in v)) for v in rays}
    assert set(enumerate_evs(pair_balance(False))) == expected


def test_decompose_examples():
    K = flux_cone()
    assert set(conformal_decompose(K, vecq(*F)).terms) == {vecq(*E1), vecq(*E3)}
    assert conformal_decompose(K, vecq(3, 0, 0, 3)).terms == (vecq(3, 0, 0, 3),)
    assert conformal_decompose(K, vecq(0, 0, 0, 0)).terms == ()
    x = vecq(1, 2, 3, 4)
    dec = conformal_decompose(pair_balance(), x)
    assert len(dec.terms) == 3
    assert check_conic(x, dec.terms, {}) == []


def test_decompose_rejects_non_member():
    with pytest.raises(NotMemberError, match="coordinate 1"):
        conformal_decompose(flux_cone(), vecq(-1, 0, 0, -1))


def test_swnd_examples():
    K = flux_cone()
    assert is_swnd(K, vecq(*E3))
    assert is_swnd(K, vecq(*E1))
    assert not is_swnd(K, vecq(*F))


def test_generating_superset_examples():
    K = flux_cone()
    assert is_conformal_generating_superset(K, [E1, E2, E3])
    assert not is_conformal_generating_superset(K, [E1, E2])
    assert is_conformal_generating_superset(K, [vecq(2, 0, 0, 2), E2, vecq(7, 7, 7, 0), F])


def test_weighted_terms():
    dec = conformal_decompose(flux_cone(), vecq(4, 2, 2, 2))
    assert sorted(dec.weighted()) == [(2, vecq(*E1)), (2, vecq(*E3))]


@st.composite
def scones(draw, max_cols=5, max_rows=3):
    r = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(-2, 2), min_size=r, max_size=r), max_size=max_rows))
    nonneg = draw(st.sets(st.integers(0, r - 1)))
    return make_scone(rows, nonneg, ncols=r)


@settings(max_examples=60, deadline=None)
@given(scones())
def test_evs_are_elementary_with_distinct_signs(K):
    evs = enumerate_evs(K)
    assert all(is_elementary(K, e) for e in evs)
    assert distinct_signs(evs)
    assert all(normalize_primitive(e) == e for e in evs)


@settings(max_examples=60, deadline=None)
@given(scones(), st.data())
def test_decomposition_contract(K, data):
    evs = enumerate_evs(K)
    if not evs:
        return
    chosen = data.draw(st.lists(st.sampled_from(evs), min_size=1, max_size=3))
    weights = data.draw(st.lists(st.integers(1, 3), min_size=len(chosen), max_size=len(chosen)))
    x = ratlin.vsum((ratlin.scale(w, e) for w, e in zip(weights, chosen)), K.ncols)
    dec = conformal_decompose(K, x)
    assert check_conic(x, dec.terms, {"dim": K.subspace_dim, "supp": supp_size(x)}) == []
    assert all(is_elementary(K, t) for t in dec.terms)


@settings(max_examples=40, deadline=None)
@given(scones(max_cols=4), st.data())
def test_every_member_is_a_conformal_sum_of_conforming_evs(K, data):
    evs = enumerate_evs(K)
    if len(evs) < 2:
        return
    a, b = data.draw(st.lists(st.sampled_from(evs), min_size=2, max_size=2, unique=True))
    x = ratlin.add(a, b)
    if not any(x):
        return
    terms = conformal_decompose(K, x).terms
    assert all(conforms(t, x) for t in terms)
    assert is_conformal_generating_superset(K, evs)
