"""Polyhedra {x : A_in x >= b_in, A_eq x = b_eq}.

The lift lives on coordinates (x, xi, s) with s = A_in x - xi b_in and
A_eq x = xi b_eq, and xi, s sign-constrained.  Equality rows constrain the
lifted subspace directly instead of contributing two slacks that would be
identically zero.  Elementary vectors of the lift with xi = 0 are the
elementary directions of the recession cone; those with xi > 0, scaled to
xi = 1, are the convex-conformally non-decomposable points.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import ratlin
from .cone import PolyCone, orthant_rows
from .errors import DimensionError, EmptyPolyhedronError, NotMemberError
from .ratlin import RatMat, RatVec, normalize_primitive
from .scone import SCone, conformal_decompose, enumerate_evs, ev_key, is_elementary
from .signs import SignVector


@dataclass(frozen=True)
class Polyhedron:
    A_in: RatMat
    b_in: RatVec
    A_eq: RatMat = None
    b_eq: RatVec = ()

    def __post_init__(self):
        if self.A_eq is None:
            object.__setattr__(self, "A_eq", RatMat((), self.A_in.ncols))
        object.__setattr__(self, "b_in", ratlin.vec(self.b_in))
        object.__setattr__(self, "b_eq", ratlin.vec(self.b_eq))
        if self.A_eq.ncols != self.A_in.ncols:
            raise DimensionError("inequality and equality blocks have different column counts")
        if len(self.b_in) != self.A_in.nrows or len(self.b_eq) != self.A_eq.nrows:
            raise DimensionError("right-hand side length differs from the row count")

    @property
    def ncols(self) -> int:
        return self.A_in.ncols


def make_polyhedron(A_in, b_in, A_eq=(), b_eq=(), ncols: Optional[int] = None) -> Polyhedron:
    if ncols is None:
        ncols = len(A_in[0]) if len(A_in) else len(A_eq[0])
    return Polyhedron(ratlin.mat(A_in, ncols), ratlin.vec(b_in), ratlin.mat(A_eq, ncols), ratlin.vec(b_eq))


@dataclass(frozen=True)
class PolyhedronEVs:
    conic: tuple = ()
    points: tuple = ()


@dataclass(frozen=True)
class AffineDecomposition:
    """``input = sum(conic_terms) + sum(lam * point for lam, point in convex_terms)``."""

    conic_terms: tuple
    convex_terms: tuple
    input: RatVec = field(default=())


def _check(P: Polyhedron, x: Sequence) -> RatVec:
    x = ratlin.vec(x)
    if len(x) != P.ncols:
        raise DimensionError(f"polyhedron lives in dimension {P.ncols}, vector has length {len(x)}")
    return x


def slack(P: Polyhedron, x: Sequence) -> RatVec:
    return ratlin.sub(P.A_in.apply(x), P.b_in)


def first_violation(P: Polyhedron, x: Sequence) -> Optional[str]:
    x = _check(P, x)
    for i, s in enumerate(slack(P, x)):
        if s < 0:
            return f"inequality row {i + 1}: (A x - b)_{i + 1} = {s} < 0"
    for i, (a, c) in enumerate(zip(P.A_eq.apply(x), P.b_eq)):
        if a != c:
            return f"equality row {i + 1}: (A_eq x)_{i + 1} = {a} != {c}"
    return None


def polyhedron_contains(P: Polyhedron, x: Sequence) -> bool:
    return first_violation(P, x) is None


def recession_cone(P: Polyhedron) -> PolyCone:
    rows = P.A_in.rows + P.A_eq.rows + tuple(ratlin.scale(-1, row) for row in P.A_eq.rows)
    return PolyCone(RatMat(rows, P.ncols))


def homogenize(P: Polyhedron) -> PolyCone:
    r = P.ncols
    rows = [row + (-b,) for row, b in zip(P.A_in.rows, P.b_in)]
    rows.append(ratlin.unit(r + 1, r))
    for row, b in zip(P.A_eq.rows, P.b_eq):
        rows.append(row + (-b,))
        rows.append(ratlin.scale(-1, row + (-b,)))
    return PolyCone(RatMat(tuple(rows), r + 1))


def lift_polyhedron(P: Polyhedron) -> SCone:
    r, m = P.ncols, P.A_in.nrows
    rows = []
    for i, (row, b) in enumerate(zip(P.A_in.rows, P.b_in)):
        rows.append(row + (-b,) + ratlin.scale(-1, ratlin.unit(m, i)))
    for row, b in zip(P.A_eq.rows, P.b_eq):
        rows.append(row + (-b,) + ratlin.zeros(m))
    return SCone(RatMat(tuple(rows), r + 1 + m), frozenset(range(r, r + 1 + m)))


def lifted_point(P: Polyhedron, x: Sequence) -> RatVec:
    return tuple(x) + (Fraction(1),) + slack(P, x)


def lifted_direction(P: Polyhedron, v: Sequence) -> RatVec:
    return tuple(v) + (Fraction(0),) + P.A_in.apply(v)


def active_rank(P: Polyhedron, x: RatVec) -> int:
    rows = tuple(row for row, s in zip(P.A_in.rows, slack(P, x)) if s == 0) + P.A_eq.rows
    return ratlin.rank(RatMat(rows, P.ncols))


def is_vertex(P: Polyhedron, x: Sequence) -> bool:
    x = _check(P, x)
    return polyhedron_contains(P, x) and active_rank(P, x) == P.ncols


def is_ccnd(P: Polyhedron, x: Sequence) -> bool:
    x = _check(P, x)
    return polyhedron_contains(P, x) and is_elementary(lift_polyhedron(P), lifted_point(P, x))


def enumerate_evs_polyhedron(P: Polyhedron) -> PolyhedronEVs:
    r = P.ncols
    conic, points = set(), set()
    for e in enumerate_evs(lift_polyhedron(P)):
        xi = e[r]
        if xi == 0:
            conic.add(normalize_primitive(e[:r]))
        else:
            points.add(tuple(a / xi for a in e[:r]))
    return PolyhedronEVs(tuple(sorted(conic, key=ev_key)), tuple(sorted(points, key=ev_key)))


def conformal_decompose_polyhedron(P: Polyhedron, x: Sequence) -> AffineDecomposition:
    x = _check(P, x)
    violation = first_violation(P, x)
    if violation is not None:
        raise NotMemberError(violation)
    r = P.ncols
    conic, convex = [], []
    for t in conformal_decompose(lift_polyhedron(P), lifted_point(P, x)).terms:
        tau = t[r]
        if tau == 0:
            conic.append(t[:r])
        else:
            convex.append((tau, tuple(a / tau for a in t[:r])))
    return AffineDecomposition(tuple(conic), tuple(convex), x)


def implicit_equalities(P: Polyhedron) -> list[int]:
    r = P.ncols
    weak = list(zip(P.A_in.rows, P.b_in))
    eq = list(zip(P.A_eq.rows, P.b_eq))
    if ratlin.feasible([], weak, eq, r) is None:
        raise EmptyPolyhedronError("the polyhedron is empty")
    return [i for i, (row, b) in enumerate(weak) if ratlin.feasible([(row, b)], weak, eq, r) is None]


def polyhedron_dim(P: Polyhedron) -> int:
    rows = P.A_eq.rows + tuple(P.A_in.rows[i] for i in implicit_equalities(P))
    return P.ncols - ratlin.rank(RatMat(rows, P.ncols))


def intersect_orthant(P: Polyhedron, X: SignVector) -> Polyhedron:
    if X.dim != P.ncols:
        raise DimensionError("orthant dimension differs from the polyhedron")
    extra = orthant_rows(X)
    return Polyhedron(P.A_in.append_rows(extra), P.b_in + ratlin.zeros(len(extra)), P.A_eq, P.b_eq)
