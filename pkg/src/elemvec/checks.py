"""Invariant checks on decompositions; each returns a list of failure messages."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import ratlin
from .ratlin import RatMat, RatVec, support
from .signs import conforms, sign_of


def check_conic(x: RatVec, terms: Sequence[RatVec], bounds: dict[str, int], ordered: bool = True) -> list[str]:
    """Reconstruction, conformality, independence and cardinality bounds of a conic decomposition.

    ``ordered`` also demands that every term has a coordinate zero in all
    earlier terms; projected cone decompositions only guarantee this on the
    lifted coordinates.
    """
    fails = []
    n = len(x)
    if ratlin.vsum(terms, n) != tuple(x):
        fails.append("reconstruction: terms do not sum to the input")
    for k, t in enumerate(terms):
        if not any(t):
            fails.append(f"nonzero: term {k} is zero")
        if not conforms(t, x):
            fails.append(f"conformality: term {k} does not conform to the input")
    for k, t in enumerate(terms if ordered else ()):
        if not any(t[i] != 0 and all(s[i] == 0 for s in terms[:k]) for i in range(n)):
            fails.append(f"ordering: term {k} has no coordinate that is zero in all earlier terms")
    if terms and ratlin.rank(RatMat(tuple(tuple(t) for t in terms), n)) != len(terms):
        fails.append("independence: terms are linearly dependent")
    for name, bound in bounds.items():
        if len(terms) > bound:
            fails.append(f"bound {name}: {len(terms)} terms > {bound}")
    return fails


def check_affine(x: RatVec, conic_terms, convex_terms, bounds: dict[str, int]) -> list[str]:
    fails = []
    n = len(x)
    weights = [lam for lam, _ in convex_terms]
    if not convex_terms:
        fails.append("convex part: no convex terms")
    if sum(weights, Fraction(0)) != 1:
        fails.append(f"convex part: weights sum to {sum(weights, Fraction(0))}, not 1")
    if any(lam < 0 for lam in weights):
        fails.append("convex part: negative weight")
    recon = ratlin.vsum(list(conic_terms) + [ratlin.scale(lam, p) for lam, p in convex_terms], n)
    if recon != tuple(x):
        fails.append("reconstruction: terms do not sum to the input")
    for k, t in enumerate(conic_terms):
        if not conforms(t, x):
            fails.append(f"conformality: conic term {k} does not conform to the input")
    for k, (_, p) in enumerate(convex_terms):
        if not conforms(p, x):
            fails.append(f"conformality: point {k} does not conform to the input")
    size = len(conic_terms) + len(convex_terms)
    for name, bound in bounds.items():
        if size > bound:
            fails.append(f"bound {name}: {size} terms > {bound}")
    return fails


def distinct_signs(vectors: Sequence[RatVec]) -> bool:
    signs = [sign_of(v) for v in vectors]
    return len(set(signs)) == len(signs)


def supp_size(v) -> int:
    return len(support(v))
