import random

import pytest
from hypothesis import given, settings, strategies as st

from elemvec import ratlin
from elemvec.errors import NotMemberError, SizeGuardError
from elemvec.oracle import (
    brute_cnd,
    brute_evs,
    has_private_coordinate,
    min_conformal_size,
    positive_combination,
    random_polyhedron,
    random_scone,
)
from elemvec.polyhedron import polyhedron_contains
from elemvec.scone import conformal_decompose, enumerate_evs, is_elementary, make_scone

from cases import E1, E2, E3, F, flux_cone, pair_balance, vecq


def test_brute_evs_examples():
    assert set(brute_evs(flux_cone())) == {vecq(*E1), vecq(*E2), vecq(*E3)}
    assert brute_evs(pair_balance()) == enumerate_evs(pair_balance())
    assert set(brute_evs(make_scone([], (), ncols=2))) == {vecq(1, 0), vecq(-1, 0), vecq(0, 1), vecq(0, -1)}


def test_min_conformal_size_examples():
    assert min_conformal_size(pair_balance(), vecq(1, 2, 3, 4)) == 3
    assert min_conformal_size(flux_cone(), vecq(*F)) == 2
    assert min_conformal_size(flux_cone(), vecq(*E2)) == 1
    assert min_conformal_size(flux_cone(), vecq(0, 0, 0, 0)) == 0


def test_brute_cnd_examples():
    assert brute_cnd(flux_cone(), vecq(*E1))
    assert not brute_cnd(flux_cone(), vecq(*F))
    assert brute_cnd(make_scone([], (0,), ncols=1), vecq(5))


def test_guards():
    wide = make_scone([], (), ncols=9)
    with pytest.raises(SizeGuardError):
        brute_cnd(wide, ratlin.unit(9, 0))
    with pytest.raises(SizeGuardError):
        brute_evs(make_scone([], (), ncols=13))
    with pytest.raises(NotMemberError):
        brute_cnd(flux_cone(), vecq(-1, 0, 0, -1))


def test_positive_combination():
    lam = positive_combination([vecq(*E1), vecq(*E3)], vecq(*F))
    assert lam == vecq(1, 1)
    # E3 = E1 + E2, a cancelling sum; positivity alone does not ask for conformality
    assert positive_combination([vecq(*E1), vecq(*E2)], vecq(*E3)) == vecq(1, 1)
    assert positive_combination([vecq(*E1)], vecq(*E3)) is None


def test_private_coordinates():
    assert has_private_coordinate([vecq(1, 0), vecq(0, 1)]) == [True, True]
    assert has_private_coordinate([vecq(1, 1, 0), vecq(0, 1, 1), vecq(1, 0, 1)]) == [False, False, False]


def test_random_polyhedra_are_nonempty():
    rng = random.Random(3)
    for _ in range(20):
        P = random_polyhedron(rng, 3, 3, n_eq=1)
        w = ratlin.feasible([], list(zip(P.A_in.rows, P.b_in)), list(zip(P.A_eq.rows, P.b_eq)), 3)
        assert w is not None and polyhedron_contains(P, w)


def test_random_generator_is_seeded():
    assert random_scone(random.Random(7), 5, 2) == random_scone(random.Random(7), 5, 2)


@st.composite
def scones(draw):
    r = draw(st.integers(1, 5))
    rows = draw(st.lists(st.lists(st.integers(-2, 2), min_size=r, max_size=r), max_size=3))
    return make_scone(rows, draw(st.sets(st.integers(0, r - 1))), ncols=r)


@settings(max_examples=40, deadline=None)
@given(scones())
def test_brute_evs_matches_circuit_walk(K):
    assert brute_evs(K) == enumerate_evs(K)


@settings(max_examples=30, deadline=None)
@given(scones(), st.data())
def test_greedy_is_never_below_the_minimum(K, data):
    evs = enumerate_evs(K)
    if not evs:
        return
    chosen = data.draw(st.lists(st.sampled_from(evs), min_size=1, max_size=3))
    x = ratlin.vsum(chosen, K.ncols)
    k = min_conformal_size(K, x)
    assert k is not None and k <= len(conformal_decompose(K, x).terms)
    if any(x):
        assert brute_cnd(K, x) == is_elementary(K, x)
