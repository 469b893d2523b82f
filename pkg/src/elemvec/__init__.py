"""Elementary vectors and conformal decompositions of s-cones, polyhedral cones and polyhedra."""
from .cone import (
    PolyCone,
    cone_contains,
    cone_dim,
    conformal_decompose_cone,
    enumerate_evs_cone,
    is_elementary_cone,
    is_extreme,
    lift,
    make_cone,
)
from .flux import (
    MetabolicNetwork,
    ReactionBounds,
    enumerate_ems,
    flux_cone,
    flux_polyhedron,
    knockout_evs,
    make_network,
)
from .polyhedron import (
    Polyhedron,
    PolyhedronEVs,
    conformal_decompose_polyhedron,
    enumerate_evs_polyhedron,
    homogenize,
    is_ccnd,
    is_vertex,
    lift_polyhedron,
    make_polyhedron,
    polyhedron_dim,
    recession_cone,
)
from .scone import (
    SCone,
    conformal_decompose,
    conformal_reduce,
    enumerate_evs,
    is_conformal_generating_superset,
    is_elementary,
    is_swnd,
    make_scone,
    scone_contains,
)
from .signs import SignVector, conforms, orthant_contains, sign_leq, sign_of

__version__ = "0.1.0"
