"""Definition-level brute force, used to cross-check the fast routines.

Nothing here uses circuits or restricted kernels; every decision reduces
to exact feasibility problems solved by :func:`elemvec.ratlin.feasible`.
Exponential in the dimension and guarded accordingly.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

from . import ratlin
from .cone import PolyCone
from .errors import NotMemberError, SizeGuardError
from .polyhedron import Polyhedron
from .ratlin import RatMat, RatVec, normalize_primitive, support
from .scone import SCone, ev_key, scone_contains
from .signs import conforms

MAX_EV_COLS = 12
MAX_CND_COLS = 8
MAX_CONFORMAL_BOUND = 6


def brute_evs(K: SCone) -> list[RatVec]:
    """Rays of members whose support is inclusion-minimal among realizable supports."""
    r = K.ncols
    if r > MAX_EV_COLS:
        raise SizeGuardError(f"brute_evs is limited to {MAX_EV_COLS} columns, got {r}")
    realizable: list[frozenset] = []
    rays = set()
    for k in range(1, r + 1):
        for T in combinations(range(r), k):
            Tset = frozenset(T)
            if any(S <= Tset for S in realizable):
                continue
            eq = [(row, 0) for row in K.kernel_of.rows]
            eq += [(ratlin.unit(r, j), 0) for j in range(r) if j not in Tset]
            free = [i for i in T if i not in K.nonneg]
            fixed = [(ratlin.unit(r, i), 0) for i in T if i in K.nonneg]
            hit = False
            for signs in product((1, -1), repeat=len(free)):
                strict = fixed + [(ratlin.scale(s, ratlin.unit(r, i)), 0) for s, i in zip(signs, free)]
                w = ratlin.feasible(strict, [], eq, r)
                if w is not None:
                    rays.add(normalize_primitive(w))
                    hit = True
            if hit:
                realizable.append(Tset)
    return sorted(rays, key=ev_key)


def min_conformal_size(K: SCone, x: Sequence, bound: int = MAX_CONFORMAL_BOUND) -> Optional[int]:
    """Fewest elementary vectors in any conformal decomposition of x, if at most ``bound``."""
    x = ratlin.vec(x)
    if bound > MAX_CONFORMAL_BOUND:
        raise SizeGuardError(f"bound is limited to {MAX_CONFORMAL_BOUND}")
    if not scone_contains(K, x):
        raise NotMemberError("vector is not a member of the s-cone")
    if not any(x):
        return 0
    evs = [e for e in brute_evs(K) if conforms(e, x)]
    for k in range(1, bound + 1):
        for subset in combinations(evs, k):
            if positive_combination(subset, x) is not None:
                return k
    return None


def positive_combination(vectors: Sequence[RatVec], x: RatVec) -> Optional[RatVec]:
    """Strictly positive coefficients lam with sum(lam_i v_i) = x, or None."""
    k = len(vectors)
    eq = [(tuple(v[i] for v in vectors), x[i]) for i in range(len(x))]
    strict = [(ratlin.unit(k, i), 0) for i in range(k)]
    return ratlin.feasible(strict, [], eq, k)


def brute_cnd(K: SCone, x: Sequence) -> bool:
    """Conformal non-decomposability decided straight from the definition.

    x splits as x1 + x2 with conformal, non-proportional parts iff some x1 in
    the subspace lies in the box between 0 and x (coordinate-wise, with the
    signs of x) and is not a multiple of x.  Non-proportionality is the
    disjunction over j of x_i0 * x1_j - x_j * x1_i0 != 0, one strict LP per
    (j, sign).
    """
    x = ratlin.vec(x)
    r = K.ncols
    if r > MAX_CND_COLS:
        raise SizeGuardError(f"brute_cnd is limited to {MAX_CND_COLS} columns, got {r}")
    if not scone_contains(K, x):
        raise NotMemberError("vector is not a member of the s-cone")
    supp = support(x)
    if not supp:
        raise ValueError("zero vector")
    eq = [(row, 0) for row in K.kernel_of.rows]
    eq += [(ratlin.unit(r, k), 0) for k in range(r) if x[k] == 0]
    weak = []
    for k in supp:
        s = 1 if x[k] > 0 else -1
        e = ratlin.unit(r, k)
        weak.append((ratlin.scale(s, e), 0))
        weak.append((ratlin.scale(-s, e), -s * x[k]))
    i0 = supp[0]
    for j in supp[1:]:
        direction = [Fraction(0)] * r
        direction[j] = x[i0]
        direction[i0] = -x[j]
        for s in (1, -1):
            if ratlin.feasible([(ratlin.scale(s, direction), 0)], weak, eq, r) is not None:
                return False
    return True


def has_private_coordinate(vectors: Sequence[RatVec]) -> list[bool]:
    """For each vector, whether some coordinate is nonzero in it and zero in all the others."""
    out = []
    for a, v in enumerate(vectors):
        others = [w for b, w in enumerate(vectors) if b != a]
        out.append(any(v[i] != 0 and all(w[i] == 0 for w in others) for i in range(len(v))))
    return out


# -- random instances -----------------------------------------------------------

def random_matrix(rng: random.Random, m: int, r: int, density: float = 0.6, lo: int = -3, hi: int = 3) -> RatMat:
    rows = []
    for _ in range(m):
        rows.append(tuple(Fraction(rng.randint(lo, hi)) if rng.random() < density else Fraction(0) for _ in range(r)))
    return RatMat(tuple(rows), r)


def random_scone(rng: random.Random, r: int, m: int, density: float = 0.6, nonneg_prob: float = 0.5) -> SCone:
    M = random_matrix(rng, m, r, density)
    return SCone(M, frozenset(i for i in range(r) if rng.random() < nonneg_prob))


def random_cone(rng: random.Random, r: int, m: int, density: float = 0.7) -> PolyCone:
    return PolyCone(random_matrix(rng, m, r, density))


def random_polyhedron(rng: random.Random, r: int, m: int, density: float = 0.7, n_eq: int = 0) -> Polyhedron:
    A = random_matrix(rng, m, r, density)
    A_eq = random_matrix(rng, n_eq, r, density)
    # Right-hand sides chosen so that a random small integer point is feasible.
    anchor = tuple(Fraction(rng.randint(-1, 1)) for _ in range(r))
    b = tuple(a - rng.randint(0, 2) for a in A.apply(anchor))
    return Polyhedron(A, b, A_eq, A_eq.apply(anchor))


def random_conic_combination(rng: random.Random, evs: Sequence[RatVec], n: int, max_terms: int = 3) -> RatVec:
    if not evs:
        return ratlin.zeros(n)
    k = rng.randint(1, min(max_terms, len(evs)))
    chosen = rng.sample(list(evs), k)
    return ratlin.vsum((ratlin.scale(rng.randint(1, 3), e) for e in chosen), n)


def random_convex_combination(rng: random.Random, points: Sequence[RatVec], n: int, max_terms: int = 3) -> RatVec:
    k = rng.randint(1, min(max_terms, len(points)))
    chosen = rng.sample(list(points), k)
    weights = [rng.randint(1, 4) for _ in chosen]
    total = sum(weights)
    return ratlin.vsum((ratlin.scale(Fraction(w, total), p) for w, p in zip(weights, chosen)), n)
