"""Subspace cones {v : Mv = 0, v_i >= 0 for i in F}.

Elementary vectors of an s-cone are its support-minimal members.  A member
v is support-minimal exactly when the subspace vectors supported inside
supp(v) form a line: if that space had dimension two or more, moving along
a second direction from v until a coordinate vanishes stays inside the
cone (signs do not change before the first zero) and shrinks the support;
if it is a line, every member with smaller-or-equal support is a multiple
of v.  Enumeration is therefore a walk over circuits of ker(M).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from . import ratlin
from .errors import DimensionError, NotMemberError
from .ratlin import RatMat, RatVec, normalize_primitive, support
from .signs import conforms


@dataclass(frozen=True)
class SCone:
    kernel_of: RatMat
    nonneg: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "nonneg", frozenset(self.nonneg))
        for i in self.nonneg:
            if not 0 <= i < self.kernel_of.ncols:
                raise IndexError(f"sign-constrained index {i} out of range")

    @property
    def ncols(self) -> int:
        return self.kernel_of.ncols

    @property
    def subspace_dim(self) -> int:
        return self.ncols - ratlin.rank(self.kernel_of)

    def block_permutation(self) -> tuple[int, ...]:
        """Coordinate order placing free coordinates first and sign-constrained ones last."""
        free = [i for i in range(self.ncols) if i not in self.nonneg]
        return tuple(free + sorted(self.nonneg))

    def with_zero(self, coords: Iterable[int]) -> "SCone":
        """The s-cone with the given coordinates forced to zero."""
        rows = [ratlin.unit(self.ncols, j) for j in coords]
        return SCone(self.kernel_of.append_rows(rows), self.nonneg)


def make_scone(kernel_rows: Sequence[Sequence], nonneg: Iterable[int] = (), ncols: int | None = None) -> SCone:
    return SCone(ratlin.mat(kernel_rows, ncols), frozenset(nonneg))


@dataclass(frozen=True)
class ConicDecomposition:
    """Conformal sum ``input = sum(terms)``; each term is a scaled elementary vector."""

    terms: tuple
    input: RatVec

    def weighted(self) -> list[tuple[Fraction, RatVec]]:
        """Terms as (weight, primitive elementary vector) pairs."""
        out = []
        for t in self.terms:
            e = normalize_primitive(t)
            i = support(e)[0]
            out.append((t[i] / e[i], e))
        return out


def ev_key(v: RatVec):
    return (support(v), v)


def scone_contains(K: SCone, v: Sequence) -> bool:
    if len(v) != K.ncols:
        raise DimensionError(f"s-cone has {K.ncols} coordinates, vector has {len(v)}")
    return all(a == 0 for a in K.kernel_of.apply(v)) and all(v[i] >= 0 for i in K.nonneg)


def first_violation(K: SCone, v: Sequence) -> str | None:
    if len(v) != K.ncols:
        raise DimensionError(f"s-cone has {K.ncols} coordinates, vector has {len(v)}")
    for i, a in enumerate(K.kernel_of.apply(v)):
        if a != 0:
            return f"kernel row {i + 1}: (Mv)_{i + 1} = {a} != 0"
    for i in sorted(K.nonneg):
        if v[i] < 0:
            return f"sign constraint on coordinate {i + 1}: v_{i + 1} = {v[i]} < 0"
    return None


def _require_member(K: SCone, v: Sequence) -> None:
    violation = first_violation(K, v)
    if violation is not None:
        raise NotMemberError(violation)


def _proportional(u: RatVec, v: RatVec) -> bool:
    return ratlin.rank(RatMat((tuple(u), tuple(v)), len(u))) < 2


def conformal_reduce(K: SCone, x: Sequence, xp: Sequence) -> tuple[Fraction, RatVec]:
    """Step x -> x - lam*xp to the first coordinate zero while keeping sign(x'') <= sign(x).

    lam > 0 whenever some coordinate of xp agrees in sign with x (in
    particular when xp conforms to x); otherwise -xp conforms to x and lam < 0.
    """
    x, xp = ratlin.vec(x), ratlin.vec(xp)
    _require_member(K, x)
    _require_member(K, xp)
    if not any(x) or not any(xp):
        raise ValueError("both vectors must be nonzero")
    if not set(support(xp)) <= set(support(x)):
        raise ValueError("support of x' is not contained in the support of x")
    if _proportional(x, xp):
        raise ValueError("x and x' are proportional")
    ratios = [x[i] / xp[i] for i in support(xp)]
    positive = [q for q in ratios if q > 0]
    lam = min(positive) if positive else max(ratios)
    return lam, ratlin.sub(x, ratlin.scale(lam, xp))


def is_elementary(K: SCone, v: Sequence) -> bool:
    v = ratlin.vec(v)
    if len(v) != K.ncols:
        raise DimensionError(f"s-cone has {K.ncols} coordinates, vector has {len(v)}")
    if not any(v) or not scone_contains(K, v):
        return False
    return len(ratlin.restricted_kernel(K.kernel_of, support(v))) == 1


def enumerate_evs(K: SCone) -> list[RatVec]:
    """One primitive representative per elementary ray, sorted by (support, entries)."""
    return list(_enumerate_evs(K))


@lru_cache(maxsize=256)
def _enumerate_evs(K: SCone) -> tuple:
    M, r = K.kernel_of, K.ncols
    found = set()
    for k in range(1, min(ratlin.rank(M) + 1, r) + 1):
        for T in combinations(range(r), k):
            basis = ratlin.restricted_kernel(M, T)
            if len(basis) != 1:
                continue
            g = basis[0]
            if support(g) != T:
                continue
            for cand in (g, ratlin.scale(-1, g)):
                if all(cand[i] >= 0 for i in K.nonneg):
                    found.add(normalize_primitive(cand))
    return tuple(sorted(found, key=ev_key))


def conformal_decompose(K: SCone, x: Sequence) -> ConicDecomposition:
    """Greedy conformal decomposition into elementary vectors.

    Each round takes the first elementary vector (in enumeration order)
    conforming to the residual and subtracts its largest multiple that keeps
    the residual conformal, which zeroes at least one coordinate.  Terms are
    returned latest-first, so every term has a coordinate that is zero in all
    terms before it.
    """
    x = ratlin.vec(x)
    _require_member(K, x)
    evs = _enumerate_evs(K)
    residual = x
    extracted = []
    while any(residual):
        e = next((e for e in evs if conforms(e, residual)), None)
        if e is None:
            raise AssertionError("no elementary vector conforms to a nonzero member")
        lam = min(residual[i] / e[i] for i in support(e))
        term = ratlin.scale(lam, e)
        extracted.append(term)
        residual = ratlin.sub(residual, term)
    return ConicDecomposition(tuple(reversed(extracted)), x)


def is_swnd(K: SCone, x: Sequence) -> bool:
    """Decide support-wise non-decomposability by exact feasibility search.

    A decomposition x = x1 + x2 with different supports exists iff, after
    naming the parts suitably, some i in supp(x) has x1_i = 0 while x1 is
    nonzero at some other j; one LP per (i, j, sign of x1_j).
    """
    x = ratlin.vec(x)
    _require_member(K, x)
    if not any(x):
        raise ValueError("zero vector")
    r = K.ncols
    supp = support(x)
    base_eq = [(row, 0) for row in K.kernel_of.rows]
    base_eq += [(ratlin.unit(r, k), 0) for k in range(r) if x[k] == 0]
    weak = []
    for f in K.nonneg:
        e = ratlin.unit(r, f)
        weak.append((e, 0))
        weak.append((ratlin.scale(-1, e), -x[f]))
    for i in supp:
        eq = base_eq + [(ratlin.unit(r, i), 0)]
        for j in supp:
            if j == i:
                continue
            for s in ((1,) if j in K.nonneg else (1, -1)):
                strict = [(ratlin.scale(s, ratlin.unit(r, j)), 0)]
                if ratlin.feasible(strict, weak, eq, r) is not None:
                    return False
    return True


def is_conformal_generating_superset(K: SCone, G: Iterable[Sequence]) -> bool:
    """True iff G holds a positive multiple of every elementary vector of K."""
    reps = set()
    for g in G:
        g = ratlin.vec(g)
        _require_member(K, g)
        if any(g):
            reps.add(normalize_primitive(g))
    return all(e in reps for e in _enumerate_evs(K))
