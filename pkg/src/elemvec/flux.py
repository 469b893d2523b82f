"""Metabolic networks: flux cones, flux polyhedra, elementary modes and knockouts.

Indices are 0-based here; the JSON front end converts from 1-based reaction
numbers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import ratlin
from .polyhedron import Polyhedron, PolyhedronEVs, enumerate_evs_polyhedron
from .ratlin import RatMat, RatVec
from .scone import SCone, enumerate_evs


@dataclass(frozen=True)
class MetabolicNetwork:
    stoichiometry: RatMat
    irreversible: frozenset = frozenset()
    reaction_names: tuple = ()
    metabolite_names: tuple = ()

    def __post_init__(self):
        n, r = self.stoichiometry.shape
        object.__setattr__(self, "irreversible", frozenset(self.irreversible))
        if not self.reaction_names:
            object.__setattr__(self, "reaction_names", tuple(f"R{j + 1}" for j in range(r)))
        if not self.metabolite_names:
            object.__setattr__(self, "metabolite_names", tuple(f"M{i + 1}" for i in range(n)))
        if len(self.reaction_names) != r or len(self.metabolite_names) != n:
            raise ValueError("name lists do not match the stoichiometric matrix")
        if any(not 0 <= j < r for j in self.irreversible):
            raise IndexError("irreversible reaction index out of range")

    @property
    def n_reactions(self) -> int:
        return self.stoichiometry.ncols


def make_network(N: Sequence[Sequence], irreversible: Iterable[int] = (), ncols: Optional[int] = None, **names) -> MetabolicNetwork:
    return MetabolicNetwork(ratlin.mat(N, ncols), frozenset(irreversible), **names)


@dataclass(frozen=True)
class ReactionBounds:
    """reaction index -> (lower or None, upper or None)."""

    bounds: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for j, (lo, hi) in self.bounds.items():
            lo = None if lo is None else ratlin.as_fraction(lo)
            hi = None if hi is None else ratlin.as_fraction(hi)
            if lo is not None and hi is not None and lo > hi:
                raise ValueError(f"reaction {j}: lower bound {lo} exceeds upper bound {hi}")
            clean[j] = (lo, hi)
        object.__setattr__(self, "bounds", clean)


def flux_cone(net: MetabolicNetwork) -> SCone:
    return SCone(net.stoichiometry, net.irreversible)


def flux_polyhedron(net: MetabolicNetwork, bounds: ReactionBounds = ReactionBounds()) -> Polyhedron:
    r = net.n_reactions
    rows, rhs = [], []
    for j in sorted(net.irreversible):
        rows.append(ratlin.unit(r, j))
        rhs.append(Fraction(0))
    for j, (lo, hi) in sorted(bounds.bounds.items()):
        if not 0 <= j < r:
            raise IndexError(f"bounded reaction index {j} out of range")
        if lo is not None:
            rows.append(ratlin.unit(r, j))
            rhs.append(lo)
        if hi is not None:
            rows.append(ratlin.scale(-1, ratlin.unit(r, j)))
            rhs.append(-hi)
    return Polyhedron(RatMat(tuple(rows), r), tuple(rhs), net.stoichiometry, ratlin.zeros(net.stoichiometry.nrows))


def enumerate_ems(net: MetabolicNetwork) -> list[RatVec]:
    return enumerate_evs(flux_cone(net))


EVSet = Union[PolyhedronEVs, Sequence[RatVec]]


def knockout_evs(evs: EVSet, dead: Iterable[int]):
    """Keep the elementary vectors with zero flux through every knocked-out reaction."""
    dead = sorted(set(dead))
    if isinstance(evs, PolyhedronEVs):
        dim = len((evs.conic + evs.points)[0]) if evs.conic or evs.points else None
        _check_indices(dead, dim)
        keep = lambda v: all(v[j] == 0 for j in dead)  # noqa: E731
        return PolyhedronEVs(tuple(filter(keep, evs.conic)), tuple(filter(keep, evs.points)))
    evs = list(evs)
    _check_indices(dead, len(evs[0]) if evs else None)
    return [v for v in evs if all(v[j] == 0 for j in dead)]


def _check_indices(dead, dim):
    for j in dead:
        if j < 0 or (dim is not None and j >= dim):
            raise IndexError(f"knockout index {j} out of range")


def knockout_network(net: MetabolicNetwork, dead: Iterable[int]) -> MetabolicNetwork:
    """The network with fluxes through ``dead`` pinned to zero by extra balance rows."""
    r = net.n_reactions
    dead = sorted(set(dead))
    _check_indices(dead, r)
    N = net.stoichiometry.append_rows(ratlin.unit(r, j) for j in dead)
    names = net.metabolite_names + tuple(f"knockout:{net.reaction_names[j]}" for j in dead)
    return MetabolicNetwork(N, net.irreversible, net.reaction_names, names)


def knockout_recompute(net: MetabolicNetwork, dead: Iterable[int], bounds: Optional[ReactionBounds] = None) -> EVSet:
    """Elementary vectors recomputed from scratch on the knocked-out system."""
    reduced = knockout_network(net, dead)
    if bounds is None:
        return enumerate_ems(reduced)
    return enumerate_evs_polyhedron(flux_polyhedron(reduced, bounds))
