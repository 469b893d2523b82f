"""Polyhedral cones {x : Ax >= 0} studied through their lift to an s-cone.

The lift is the graph {(x, Ax)} with the slack block sign-constrained.  The
graph of the whole space is used rather than the graph of span(C); the two
give the same set of members, since every member already satisfies Ax >= 0.
Elementary vectors of the cone are the projections of the support-minimal
vectors of the lift.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import ratlin
from .errors import DimensionError, NotMemberError
from .ratlin import RatMat, RatVec, normalize_primitive
from .scone import (
    ConicDecomposition,
    SCone,
    conformal_decompose,
    enumerate_evs,
    ev_key,
    is_elementary,
)
from .signs import SignVector


@dataclass(frozen=True)
class PolyCone:
    A: RatMat

    @property
    def ncols(self) -> int:
        return self.A.ncols


def make_cone(rows: Sequence[Sequence], ncols: int | None = None) -> PolyCone:
    return PolyCone(ratlin.mat(rows, ncols))


@dataclass(frozen=True)
class LiftedCone:
    scone: SCone
    original_dim: int


def lift(C: PolyCone) -> LiftedCone:
    m, r = C.A.shape
    neg_eye = RatMat(tuple(ratlin.scale(-1, ratlin.unit(m, i)) for i in range(m)), m)
    M = ratlin.hstack(C.A, neg_eye) if m else RatMat((), r)
    return LiftedCone(SCone(M, frozenset(range(r, r + m))), r)


def _check(C: PolyCone, x: Sequence) -> RatVec:
    x = ratlin.vec(x)
    if len(x) != C.ncols:
        raise DimensionError(f"cone lives in dimension {C.ncols}, vector has length {len(x)}")
    return x


def cone_contains(C: PolyCone, x: Sequence) -> bool:
    x = _check(C, x)
    return all(a >= 0 for a in C.A.apply(x))


def first_violation(C: PolyCone, x: Sequence) -> str | None:
    for i, a in enumerate(C.A.apply(_check(C, x))):
        if a < 0:
            return f"inequality row {i + 1}: (Ax)_{i + 1} = {a} < 0"
    return None


def is_elementary_cone(C: PolyCone, x: Sequence) -> bool:
    x = _check(C, x)
    return is_elementary(lift(C).scone, x + C.A.apply(x))


def enumerate_evs_cone(C: PolyCone) -> list[RatVec]:
    r = C.ncols
    rays = {normalize_primitive(e[:r]) for e in enumerate_evs(lift(C).scone)}
    return sorted(rays, key=ev_key)


def conformal_decompose_cone(C: PolyCone, x: Sequence) -> ConicDecomposition:
    x = _check(C, x)
    if not cone_contains(C, x):
        raise NotMemberError(first_violation(C, x))
    lifted = conformal_decompose(lift(C).scone, x + C.A.apply(x))
    r = C.ncols
    return ConicDecomposition(tuple(t[:r] for t in lifted.terms), x)


def tight_rows(C: PolyCone, x: Sequence) -> list[int]:
    return [i for i, a in enumerate(C.A.apply(x)) if a == 0]


def is_extreme(C: PolyCone, x: Sequence) -> bool:
    """Extremality via the minimal face: the tight rows must cut out a line."""
    x = _check(C, x)
    if not any(x) or not cone_contains(C, x):
        return False
    rows = tuple(C.A.rows[i] for i in tight_rows(C, x))
    return C.ncols - ratlin.rank(RatMat(rows, C.ncols)) == 1


def implicit_equalities(C: PolyCone) -> list[int]:
    r = C.ncols
    weak = [(row, 0) for row in C.A.rows]
    return [
        i for i, row in enumerate(C.A.rows)
        if ratlin.feasible([(row, 0)], weak, [], r) is None
    ]


def cone_dim(C: PolyCone) -> int:
    rows = tuple(C.A.rows[i] for i in implicit_equalities(C))
    return C.ncols - ratlin.rank(RatMat(rows, C.ncols))


def orthant_rows(X: SignVector) -> list[RatVec]:
    """Inequality rows (as "row . x >= 0") describing the closed orthant of X."""
    rows = []
    for i in range(X.dim):
        e = ratlin.unit(X.dim, i)
        s = X[i]
        if s >= 0:
            rows.append(e)
        if s <= 0:
            rows.append(ratlin.scale(-1, e))
    return rows


def intersect_orthant(C: PolyCone, X: SignVector) -> PolyCone:
    if X.dim != C.ncols:
        raise DimensionError("orthant dimension differs from the cone")
    return PolyCone(C.A.append_rows(orthant_rows(X)))


def is_conformal_generating_superset_cone(C: PolyCone, G: Iterable[Sequence]) -> bool:
    reps = set()
    for g in G:
        g = _check(C, g)
        if not cone_contains(C, g):
            raise NotMemberError(first_violation(C, g))
        if any(g):
            reps.add(normalize_primitive(g))
    return all(e in reps for e in enumerate_evs_cone(C))

