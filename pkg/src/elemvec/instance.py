"""JSON instance documents.

Rationals travel as strings ("3", "-1/6"); plain JSON integers are also
accepted on input, floats never.  Index sets and reaction numbers are
1-based in documents and 0-based in memory.

Kinds and their fields::

    subspace         kernel_matrix, [dim]
    s_cone           kernel_matrix, nonneg, [dim]
    cone             A, [dim]
    polyhedron       A, b, [A_eq, b_eq], [dim]
    flux_cone        stoichiometry, irreversible, [reaction_names, metabolite_names], [dim]
    flux_polyhedron  as flux_cone plus bounds {"<reaction>": {"lower": q, "upper": q}}

``dim`` is required only when every matrix is empty.  Any kind may carry
``expected_evs`` ({"conic": [...], "points": [...]}) for ``verify``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from .cone import PolyCone
from .flux import MetabolicNetwork, ReactionBounds, flux_cone, flux_polyhedron
from .polyhedron import Polyhedron
from .ratlin import RatMat, RatVec
from .scone import SCone

KINDS = ("subspace", "s_cone", "cone", "polyhedron", "flux_cone", "flux_polyhedron")
SCONE_KINDS = ("subspace", "s_cone", "flux_cone")
CONE_KINDS = ("cone",)
POLY_KINDS = ("polyhedron", "flux_polyhedron")
FLUX_KINDS = ("flux_cone", "flux_polyhedron")


class InstanceError(ValueError):
    """Malformed or inconsistent instance document."""


def parse_rational(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InstanceError(f"rationals must be strings or integers, got {value!r}")
    try:
        return Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InstanceError(f"cannot parse rational {value!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_vector(values) -> RatVec:
    if isinstance(values, str):
        values = [s for s in values.replace(" ", "").split(",") if s != ""]
    if not isinstance(values, list):
        raise InstanceError(f"expected a list of rationals, got {values!r}")
    return tuple(parse_rational(v) for v in values)


def format_vector(v) -> list[str]:
    return [format_rational(a) for a in v]


def _matrix(doc: dict, key: str, ncols: Optional[int], required: bool = True) -> Optional[RatMat]:
    if key not in doc:
        if required:
            raise InstanceError(f"missing field {key!r}")
        return None
    rows = doc[key]
    if not isinstance(rows, list):
        raise InstanceError(f"{key!r} must be a list of rows")
    rows = [parse_vector(r) for r in rows]
    if rows:
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise InstanceError(f"{key!r} has rows of different lengths")
        width = widths.pop()
        if ncols is not None and width != ncols:
            raise InstanceError(f"{key!r} has {width} columns, expected {ncols}")
        ncols = width
    if ncols is None:
        return None
    return RatMat(tuple(rows), ncols)


def _index_set(doc: dict, key: str, n: int) -> frozenset:
    values = doc.get(key, [])
    if not isinstance(values, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in values):
        raise InstanceError(f"{key!r} must be a list of 1-based integers")
    for i in values:
        if not 1 <= i <= n:
            raise InstanceError(f"{key!r} index {i} out of range 1..{n}")
    return frozenset(i - 1 for i in values)


@dataclass
class Instance:
    kind: str
    ncols: int
    scone: Optional[SCone] = None
    cone: Optional[PolyCone] = None
    polyhedron: Optional[Polyhedron] = None
    network: Optional[MetabolicNetwork] = None
    bounds: Optional[ReactionBounds] = None
    expected: Optional[dict] = None
    doc: dict = field(default_factory=dict)

    @property
    def family(self) -> str:
        if self.kind in SCONE_KINDS:
            return "scone"
        if self.kind in CONE_KINDS:
            return "cone"
        return "polyhedron"


def _dim(doc: dict) -> Optional[int]:
    d = doc.get("dim")
    if d is None:
        return None
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise InstanceError("'dim' must be a nonnegative integer")
    return d


def _need(ncols, kind):
    if ncols is None:
        raise InstanceError(f"{kind}: all matrices are empty, so 'dim' is required")
    return ncols


def parse_instance(doc: Any) -> Instance:
    if not isinstance(doc, dict):
        raise InstanceError("instance document must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise InstanceError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    n = _dim(doc)
    inst: Instance
    if kind in ("subspace", "s_cone"):
        M = _matrix(doc, "kernel_matrix", n)
        n = _need(n if M is None else M.ncols, kind)
        M = M if M is not None else RatMat((), n)
        nonneg = _index_set(doc, "nonneg", n) if kind == "s_cone" else frozenset()
        if kind == "s_cone" and "nonneg" not in doc:
            raise InstanceError("s_cone requires 'nonneg'")
        inst = Instance(kind, n, scone=SCone(M, nonneg))
    elif kind == "cone":
        A = _matrix(doc, "A", n)
        n = _need(n if A is None else A.ncols, kind)
        inst = Instance(kind, n, cone=PolyCone(A if A is not None else RatMat((), n)))
    elif kind == "polyhedron":
        A = _matrix(doc, "A", n)
        n = n if A is None else A.ncols
        A_eq = _matrix(doc, "A_eq", n, required=False)
        n = _need(n if A_eq is None else A_eq.ncols, kind)
        A = A if A is not None else RatMat((), n)
        A_eq = A_eq if A_eq is not None else RatMat((), n)
        b = parse_vector(doc.get("b", []))
        b_eq = parse_vector(doc.get("b_eq", []))
        if len(b) != A.nrows or len(b_eq) != A_eq.nrows:
            raise InstanceError("right-hand side lengths do not match the matrices")
        inst = Instance(kind, n, polyhedron=Polyhedron(A, b, A_eq, b_eq))
    else:
        N = _matrix(doc, "stoichiometry", n)
        n = _need(n if N is None else N.ncols, kind)
        N = N if N is not None else RatMat((), n)
        if "irreversible" not in doc:
            raise InstanceError(f"{kind} requires 'irreversible'")
        irr = _index_set(doc, "irreversible", n)
        try:
            net = MetabolicNetwork(
                N, irr,
                tuple(doc.get("reaction_names", ())),
                tuple(doc.get("metabolite_names", ())),
            )
        except (ValueError, IndexError) as exc:
            raise InstanceError(str(exc)) from exc
        inst = Instance(kind, n, network=net, scone=flux_cone(net))
        if kind == "flux_polyhedron":
            inst.bounds = _bounds(doc.get("bounds", {}), n)
            inst.polyhedron = flux_polyhedron(net, inst.bounds)
    if "expected_evs" in doc:
        exp = doc["expected_evs"]
        if not isinstance(exp, dict):
            raise InstanceError("'expected_evs' must be an object")
        inst.expected = {k: sorted(parse_vector(v) for v in exp.get(k, [])) for k in ("conic", "points")}
    inst.doc = doc
    return inst


def _bounds(raw, n: int) -> ReactionBounds:
    if not isinstance(raw, dict):
        raise InstanceError("'bounds' must map reaction numbers to {lower, upper}")
    out = {}
    for key, spec in raw.items():
        try:
            j = int(key)
        except ValueError as exc:
            raise InstanceError(f"bad reaction number {key!r}") from exc
        if not 1 <= j <= n:
            raise InstanceError(f"bounded reaction {j} out of range 1..{n}")
        if not isinstance(spec, dict) or set(spec) - {"lower", "upper"}:
            raise InstanceError(f"bounds for reaction {j} must have only 'lower'/'upper'")
        lo = parse_rational(spec["lower"]) if spec.get("lower") is not None else None
        hi = parse_rational(spec["upper"]) if spec.get("upper") is not None else None
        out[j - 1] = (lo, hi)
    try:
        return ReactionBounds(out)
    except ValueError as exc:
        raise InstanceError(str(exc)) from exc


def load_instance(path: str | Path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"invalid JSON in {path}: {exc}") from exc
    return parse_instance(doc)


def scone_document(K: SCone, kind: str = "s_cone") -> dict:
    doc = {"kind": kind, "dim": K.ncols, "kernel_matrix": [format_vector(r) for r in K.kernel_of.rows]}
    if kind == "s_cone":
        doc["nonneg"] = sorted(i + 1 for i in K.nonneg)
    return doc


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"

