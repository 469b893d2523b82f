from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from elemvec import ratlin
from elemvec.errors import DimensionError
from elemvec.ratlin import RatMat, feasible, kernel_basis, mat, normalize_primitive, rank, restricted_kernel

from cases import N, vecq

small = st.integers(-3, 3)


def matrices(max_rows=4, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda r: st.lists(st.lists(small, min_size=r, max_size=r), max_size=max_rows).map(lambda rows: mat(rows, r))
    )


def in_span(basis, v):
    if not basis:
        return not any(v)
    return rank(mat(list(basis) + [v])) == rank(mat(basis))


def test_kernel_of_stoichiometry_spans_e1_e3():
    basis = kernel_basis(mat(N))
    assert len(basis) == 2
    assert in_span(basis, vecq(1, 0, 0, 1)) and in_span(basis, vecq(1, 1, 1, 0))


def test_kernel_trivial_cases():
    assert kernel_basis(mat([[0]])) == [vecq(1)]
    assert kernel_basis(ratlin.identity(3)) == []


def test_restricted_kernel():
    (g,) = restricted_kernel(mat(N), [0, 1, 2])
    assert normalize_primitive(g) in (vecq(1, 1, 1, 0), vecq(-1, -1, -1, 0))
    assert restricted_kernel(mat(N), [0, 1]) == []
    assert restricted_kernel(mat(N), []) == []
    with pytest.raises(IndexError):
        restricted_kernel(mat(N), [4])


def test_rank_examples():
    assert rank(mat(N)) == 2
    assert rank(mat([[0, 0], [0, 0]])) == 0
    assert rank(ratlin.identity(4)) == 4


def test_normalize_primitive():
    assert normalize_primitive(vecq(2, 0, 0, 2)) == vecq(1, 0, 0, 1)
    assert normalize_primitive((Q(1, 6), Q(1, 2))) == vecq(1, 3)
    assert normalize_primitive(vecq(-2, 4)) == vecq(-1, 2)
    with pytest.raises(ValueError):
        normalize_primitive(vecq(0, 0))


def test_floats_rejected():
    with pytest.raises(TypeError):
        ratlin.vec([0.5])


def test_shape_errors():
    with pytest.raises(DimensionError):
        mat([[1, 2], [3]])
    with pytest.raises(DimensionError):
        mat(N).apply(vecq(1, 2))


@given(matrices())
def test_rank_nullity(m):
    basis = kernel_basis(m)
    assert rank(m) + len(basis) == m.ncols
    for v in basis:
        assert not any(m.apply(v))
    if basis:
        assert rank(mat(basis)) == len(basis)


@given(matrices(), st.data())
def test_restricted_kernel_vanishes_outside(m, data):
    cols = data.draw(st.sets(st.integers(0, m.ncols - 1)))
    for v in restricted_kernel(m, cols):
        assert not any(m.apply(v))
        assert set(ratlin.support(v)) <= cols


@given(st.lists(st.fractions(max_denominator=7).filter(bool), min_size=1, max_size=5), st.fractions(min_value=Q(1, 9), max_value=9))
def test_normalize_primitive_is_scale_invariant(v, c):
    v = tuple(v)
    assert normalize_primitive(v) == normalize_primitive(ratlin.scale(c, v))


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_consistent_rhs(m, x):
    x = ratlin.vec(x[: m.ncols])
    y = ratlin.solve(m, m.apply(x))
    assert y is not None and m.apply(y) == m.apply(x)


def test_feasible_examples():
    assert feasible([(vecq(1), 0)], [(vecq(-1), 0)], [], 1) is None
    w = feasible([(vecq(0, 1), 0)], [(vecq(3, 1), 0), (vecq(-1, 1), 0)], [], 2)
    assert w is not None and w[1] > 0 and 3 * w[0] + w[1] >= 0 and -w[0] + w[1] >= 0
    assert feasible([], [(vecq(1), 0)], [(vecq(1), 2)], 1) == vecq(2)


def test_feasible_empty_system():
    assert feasible([], [], [], 2) is not None
    assert feasible([(vecq(), 1)], [], [], 0) is None
    assert feasible([(vecq(), -1)], [], [], 0) == ()


# Fourier-Motzkin elimination with strictness flags, an independent decision procedure.

def fm_feasible(strict, weak, eq, dim):
    rows = [(ratlin.vec(a), Q(c), True) for a, c in strict]
    rows += [(ratlin.vec(a), Q(c), False) for a, c in weak]
    for a, c in eq:
        a = ratlin.vec(a)
        rows += [(a, Q(c), False), (ratlin.scale(-1, a), -Q(c), False)]
    for k in range(dim):
        pos = [r for r in rows if r[0][k] > 0]
        neg = [r for r in rows if r[0][k] < 0]
        rows = [r for r in rows if r[0][k] == 0]
        for ap, cp, sp in pos:
            for an, cn, sn in neg:
                lp, ln = -an[k], ap[k]
                rows.append((ratlin.add(ratlin.scale(lp, ap), ratlin.scale(ln, an)), lp * cp + ln * cn, sp or sn))
    return all((c < 0) if s else (c <= 0) for _, c, s in rows)


def systems(dim):
    row = st.tuples(st.lists(small, min_size=dim, max_size=dim), small)
    return st.tuples(st.lists(row, max_size=3), st.lists(row, max_size=3), st.lists(row, max_size=1))


@settings(max_examples=300)
@given(st.integers(0, 3).flatmap(lambda d: st.tuples(st.just(d), systems(d))))
def test_feasible_agrees_with_fourier_motzkin(case):
    dim, (strict, weak, eq) = case
    w = feasible(strict, weak, eq, dim)
    assert (w is not None) == fm_feasible(strict, weak, eq, dim)


def test_ratmat_keeps_column_count_without_rows():
    m = RatMat((), 3)
    assert m.shape == (0, 3)
    assert len(kernel_basis(m)) == 3
