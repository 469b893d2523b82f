from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from elemvec import ratlin
from elemvec.checks import check_affine, supp_size
from elemvec.cone import cone_contains, enumerate_evs_cone
from elemvec.errors import EmptyPolyhedronError, NotMemberError
from elemvec.polyhedron import (
    conformal_decompose_polyhedron,
    enumerate_evs_polyhedron,
    homogenize,
    is_ccnd,
    is_vertex,
    lift_polyhedron,
    lifted_direction,
    lifted_point,
    make_polyhedron,
    polyhedron_contains,
    polyhedron_dim,
    recession_cone,
    slack,
)
from elemvec.scone import scone_contains

from cases import E2, E3, wedge_poly, flux_poly, half_line, vecq


def test_recession_cones():
    assert enumerate_evs_cone(recession_cone(flux_poly())) == [vecq(*E2)]
    assert set(enumerate_evs_cone(recession_cone(wedge_poly()))) == {vecq(-1, 3), vecq(0, 1), vecq(1, 1)}
    segment = make_polyhedron([[1], [-1]], [0, -1])
    assert enumerate_evs_cone(recession_cone(segment)) == []


def test_homogenize_slices():
    P = make_polyhedron([[1]], [1])
    H = homogenize(P)
    assert set(H.A.rows) == {vecq(1, -1), vecq(0, 1)}
    for x in range(-2, 4):
        assert cone_contains(H, vecq(x, 1)) == polyhedron_contains(P, vecq(x))
        assert cone_contains(H, vecq(x, 0)) == cone_contains(recession_cone(P), vecq(x))


def test_lift_of_flux_polyhedron():
    P = flux_poly()
    K = lift_polyhedron(P)
    assert K.ncols == 4 + 1 + 4
    x = vecq(2, 1, 1, 1)
    assert lifted_point(P, x) == vecq(2, 1, 1, 1, 1, 2, 1, 1, 0)
    assert scone_contains(K, lifted_point(P, x))
    assert scone_contains(K, lifted_direction(P, vecq(*E2)))


def test_vertex_and_ccnd_examples():
    P = wedge_poly()
    assert is_vertex(P, (Q(1, 6), Q(1, 2)))
    assert is_vertex(P, (Q(5, 6), Q(1, 2)))
    assert not is_vertex(P, vecq(0, 1))
    assert is_ccnd(P, vecq(0, 1))
    assert not is_ccnd(P, (Q(1, 2), Q(3, 4)))
    assert is_ccnd(flux_poly(), vecq(0, 0, 0, 0))


def test_enumerate_examples():
    evs = enumerate_evs_polyhedron(flux_poly())
    assert evs.conic == (vecq(*E2),)
    assert set(evs.points) == {vecq(2, 0, 0, 2), vecq(2, 2, 2, 0), vecq(0, 0, 0, 0)}
    evs = enumerate_evs_polyhedron(wedge_poly())
    assert set(evs.conic) == {vecq(-1, 3), vecq(0, 1), vecq(1, 1)}
    assert set(evs.points) == {vecq(0, 1), (Q(1, 6), Q(1, 2)), (Q(5, 6), Q(1, 2))}
    evs = enumerate_evs_polyhedron(half_line())
    assert evs.conic == (vecq(1),) and evs.points == (vecq(0),)


def test_decompose_examples():
    P = flux_poly()
    dec = conformal_decompose_polyhedron(P, vecq(2, 1, 1, 1))
    assert dec.conic_terms == ()
    assert set(dec.convex_terms) == {(Q(1, 2), vecq(2, 0, 0, 2)), (Q(1, 2), vecq(2, 2, 2, 0))}
    dec = conformal_decompose_polyhedron(P, vecq(*E3))
    assert set(dec.convex_terms) == {(Q(1, 2), vecq(2, 2, 2, 0)), (Q(1, 2), vecq(0, 0, 0, 0))}
    dec = conformal_decompose_polyhedron(half_line(), vecq(3))
    assert dec.conic_terms == (vecq(3),) and dec.convex_terms == ((1, vecq(0)),)
    with pytest.raises(NotMemberError, match="row 4"):
        conformal_decompose_polyhedron(P, vecq(3, 3, 3, 0))


def test_dimension_examples():
    assert polyhedron_dim(wedge_poly()) == 2
    assert polyhedron_dim(flux_poly()) == 2
    assert polyhedron_dim(make_polyhedron([[1, 0], [-1, 0]], [0, 0])) == 1
    with pytest.raises(EmptyPolyhedronError):
        polyhedron_dim(make_polyhedron([[1], [-1]], [1, 0]))


def test_nonzero_points_sit_on_the_upper_bound():
    P = flux_poly()
    for p in (vecq(2, 0, 0, 2), vecq(2, 2, 2, 0)):
        assert slack(P, p)[3] == 0 and is_ccnd(P, p)


@st.composite
def polyhedra(draw):
    r = draw(st.integers(1, 2))
    m = draw(st.integers(1, 3))
    A = draw(st.lists(st.lists(st.integers(-2, 2), min_size=r, max_size=r), min_size=m, max_size=m))
    anchor = draw(st.lists(st.integers(-1, 1), min_size=r, max_size=r))
    b = [sum(a * x for a, x in zip(row, anchor)) - draw(st.integers(0, 2)) for row in A]
    return make_polyhedron(A, b)


@settings(max_examples=50, deadline=None)
@given(polyhedra(), st.data())
def test_decomposition_contract(P, data):
    evs = enumerate_evs_polyhedron(P)
    assert evs.points
    assert all(is_ccnd(P, p) for p in evs.points)
    p = data.draw(st.sampled_from(evs.points))
    d = data.draw(st.sampled_from(evs.conic)) if evs.conic else ratlin.zeros(P.ncols)
    x = ratlin.add(p, d)
    dec = conformal_decompose_polyhedron(P, x)
    bounds = {"dim+1": polyhedron_dim(P) + 1, "supp": supp_size(x) + supp_size(slack(P, x)) + 1}
    assert check_affine(x, dec.conic_terms, dec.convex_terms, bounds) == []
    assert all(is_ccnd(P, q) for _, q in dec.convex_terms)
