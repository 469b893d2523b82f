"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 non-membership.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Optional

from . import cone as cone_mod
from . import oracle
from . import polyhedron as poly_mod
from . import ratlin
from . import scone as scone_mod
from .checks import check_affine, check_conic, distinct_signs, supp_size
from .errors import EmptyPolyhedronError, NotMemberError
from .flux import knockout_evs
from .instance import (
    FLUX_KINDS,
    Instance,
    InstanceError,
    dumps,
    format_rational,
    format_vector,
    load_instance,
    parse_vector,
    scone_document,
)
from .polyhedron import PolyhedronEVs
from .ratlin import RatVec, support

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_NONMEMBER = 0, 1, 2, 3
ORACLE_MAX_COLS = 10

PREDICATES = {
    "scone": ("sm", "swnd", "cnd"),
    "cone": ("sm", "swnd", "cnd", "ex"),
    "polyhedron": ("ve", "ccnd"),
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# -- shared operations -------------------------------------------------------------

def lifted_scone(inst: Instance) -> scone_mod.SCone:
    if inst.family == "scone":
        return inst.scone
    if inst.family == "cone":
        return cone_mod.lift(inst.cone).scone
    return poly_mod.lift_polyhedron(inst.polyhedron)


def enumerate_instance(inst: Instance) -> PolyhedronEVs:
    if inst.family == "scone":
        return PolyhedronEVs(tuple(scone_mod.enumerate_evs(inst.scone)), ())
    if inst.family == "cone":
        return PolyhedronEVs(tuple(cone_mod.enumerate_evs_cone(inst.cone)), ())
    return poly_mod.enumerate_evs_polyhedron(inst.polyhedron)


def ev_document(inst: Instance, evs: PolyhedronEVs) -> dict:
    doc = {"kind": inst.kind, "conic": [format_vector(v) for v in evs.conic]}
    if inst.family == "polyhedron":
        doc["points"] = [format_vector(v) for v in evs.points]
    return doc


def violation(inst: Instance, x: RatVec) -> Optional[str]:
    if inst.family == "scone":
        return scone_mod.first_violation(inst.scone, x)
    if inst.family == "cone":
        return cone_mod.first_violation(inst.cone, x)
    return poly_mod.first_violation(inst.polyhedron, x)


def decomposition_bounds(inst: Instance, x: RatVec) -> dict[str, int]:
    if inst.family == "scone":
        return {"dim(S)": inst.scone.subspace_dim, "|supp(x)|": supp_size(x)}
    if inst.family == "cone":
        C = inst.cone
        return {"dim(C)": cone_mod.cone_dim(C), "|supp(x)|+|supp(Ax)|": supp_size(x) + supp_size(C.A.apply(x))}
    P = inst.polyhedron
    return {
        "dim(P)+1": poly_mod.polyhedron_dim(P) + 1,
        "|supp(x)|+|supp(Ax-b)|+1": supp_size(x) + supp_size(poly_mod.slack(P, x)) + 1,
    }


def decompose_instance(inst: Instance, x: RatVec):
    """Decompose and re-verify; returns (report, failures)."""
    bounds = decomposition_bounds(inst, x)
    if inst.family == "polyhedron":
        dec = poly_mod.conformal_decompose_polyhedron(inst.polyhedron, x)
        fails = check_affine(x, dec.conic_terms, dec.convex_terms, bounds)
        report = {
            "kind": inst.kind,
            "input": format_vector(x),
            "conic_terms": [_weighted(t) for t in dec.conic_terms],
            "convex_terms": [
                {"weight": format_rational(lam), "vector": format_vector(p)} for lam, p in dec.convex_terms
            ],
        }
        return report, fails
    if inst.family == "scone":
        dec = scone_mod.conformal_decompose(inst.scone, x)
        fails = check_conic(x, dec.terms, bounds)
    else:
        dec = cone_mod.conformal_decompose_cone(inst.cone, x)
        fails = check_conic(x, dec.terms, bounds, ordered=False)
    report = {
        "kind": inst.kind,
        "input": format_vector(x),
        "terms": [{"weight": format_rational(w), "vector": format_vector(e)} for w, e in dec.weighted()],
    }
    return report, fails


def _weighted(t: RatVec) -> dict:
    e = ratlin.normalize_primitive(t)
    i = support(e)[0]
    return {"weight": format_rational(t[i] / e[i]), "vector": format_vector(e)}


def check_predicate(inst: Instance, x: RatVec, predicate: str) -> tuple[bool, str]:
    allowed = PREDICATES[inst.family]
    if predicate not in allowed:
        raise CliError(f"predicate {predicate!r} does not apply to kind {inst.kind!r} (use {', '.join(allowed)})", EXIT_INPUT)
    bad = violation(inst, x)
    if bad is not None:
        return False, f"not a member: {bad}"
    if not any(x) and predicate in ("sm", "swnd", "cnd", "ex"):
        return False, "zero vector"

    if inst.family == "polyhedron":
        P = inst.polyhedron
        if predicate == "ve":
            active = [i + 1 for i, s in enumerate(poly_mod.slack(P, x)) if s == 0]
            rank = poly_mod.active_rank(P, x)
            return rank == P.ncols, f"active rows {active} plus {P.A_eq.nrows} equalities have rank {rank}, dimension {P.ncols}"
        K = poly_mod.lift_polyhedron(P)
        point = poly_mod.lifted_point(P, x)
        d = len(ratlin.restricted_kernel(K.kernel_of, support(point)))
        return d == 1, f"lifted point (x, 1, Ax-b) has restricted-kernel dimension {d}"

    if predicate == "ex":
        C = inst.cone
        tight = cone_mod.tight_rows(C, x)
        rank = ratlin.rank(ratlin.RatMat(tuple(C.A.rows[i] for i in tight), C.ncols))
        return cone_mod.is_extreme(C, x), f"tight rows {[i + 1 for i in tight]} have rank {rank}, dimension {C.ncols}"

    K = lifted_scone(inst)
    v = x if inst.family == "scone" else x + inst.cone.A.apply(x)
    where = "" if inst.family == "scone" else "lifted vector (x, Ax) "
    if predicate == "sm":
        d = len(ratlin.restricted_kernel(K.kernel_of, support(v)))
        return d == 1, f"{where}restricted-kernel dimension on the support is {d}"
    if predicate == "swnd":
        ok = scone_mod.is_swnd(K, v)
        return ok, f"{where}{'no' if ok else 'a'} support-wise decomposition found by exact feasibility search"
    if K.ncols <= oracle.MAX_CND_COLS:
        ok = oracle.brute_cnd(K, v)
        return ok, f"{where}{'no' if ok else 'a'} non-proportional conformal split found by exact feasibility search"
    d = len(ratlin.restricted_kernel(K.kernel_of, support(v)))
    return d == 1, f"{where}restricted-kernel dimension {d} (support-minimal iff conformally non-decomposable on s-cones)"


def instance_dim(inst: Instance) -> dict:
    if inst.family == "scone":
        K = inst.scone
        rows = list(K.kernel_of.rows) + [ratlin.scale(-1, r) for r in K.kernel_of.rows]
        rows += [ratlin.unit(K.ncols, i) for i in sorted(K.nonneg)]
        C = cone_mod.PolyCone(ratlin.RatMat(tuple(rows), K.ncols))
        return {"kind": inst.kind, "dim": cone_mod.cone_dim(C), "subspace_dim": K.subspace_dim}
    if inst.family == "cone":
        return {"kind": inst.kind, "dim": cone_mod.cone_dim(inst.cone)}
    try:
        return {"kind": inst.kind, "dim": poly_mod.polyhedron_dim(inst.polyhedron), "empty": False}
    except EmptyPolyhedronError:
        return {"kind": inst.kind, "dim": None, "empty": True}


def _ev_predicate(inst: Instance, evs: PolyhedronEVs) -> list[str]:
    fails = []
    if inst.family == "scone":
        fails += [f"ev_predicate: {format_vector(e)} is not support-minimal" for e in evs.conic if not scone_mod.is_elementary(inst.scone, e)]
    elif inst.family == "cone":
        fails += [f"ev_predicate: {format_vector(e)} is not elementary" for e in evs.conic if not cone_mod.is_elementary_cone(inst.cone, e)]
    else:
        P = inst.polyhedron
        rec = poly_mod.recession_cone(P)
        fails += [f"ev_predicate: {format_vector(e)} is not elementary in the recession cone" for e in evs.conic if not cone_mod.is_elementary_cone(rec, e)]
        fails += [f"ev_predicate: {format_vector(p)} is not convex-conformally non-decomposable" for p in evs.points if not poly_mod.is_ccnd(P, p)]
    return fails


def sample_members(inst: Instance, evs: PolyhedronEVs, rng: random.Random, n: int) -> list[RatVec]:
    out = []
    for _ in range(n):
        v = oracle.random_conic_combination(rng, evs.conic, inst.ncols) if evs.conic else ratlin.zeros(inst.ncols)
        if inst.family == "polyhedron":
            if not evs.points:
                break
            v = ratlin.add(v if rng.random() < 0.5 else ratlin.zeros(inst.ncols),
                           oracle.random_convex_combination(rng, evs.points, inst.ncols))
        out.append(v)
    return out


def verify_instance(inst: Instance, samples: int, seed: int) -> dict:
    failures: list[dict] = []
    ran: list[str] = []

    def record(name: str, messages: list[str]):
        ran.append(name)
        failures.extend({"check": name, "detail": m} for m in messages)

    evs = enumerate_instance(inst)
    if inst.expected is not None:
        msgs = []
        if sorted(evs.conic) != inst.expected["conic"]:
            msgs.append("conic elementary vectors differ from expected_evs.conic")
        if inst.family == "polyhedron" and sorted(evs.points) != inst.expected["points"]:
            msgs.append("points differ from expected_evs.points")
        record("expected_evs", msgs)
    record("ev_predicate", _ev_predicate(inst, evs))

    K = lifted_scone(inst)
    lifted_evs = scone_mod.enumerate_evs(K)
    record("sign_uniqueness", [] if distinct_signs(lifted_evs) else ["two elementary vectors share a sign vector"])
    if K.ncols <= ORACLE_MAX_COLS:
        record("oracle_agreement", [] if oracle.brute_evs(K) == lifted_evs else ["brute-force enumeration disagrees"])

    rng = random.Random(seed)
    msgs = []
    for x in sample_members(inst, evs, rng, samples):
        bad = violation(inst, x)
        if bad is not None:
            msgs.append(f"sampled vector {format_vector(x)} is not a member: {bad}")
            continue
        _, fails = decompose_instance(inst, x)
        msgs.extend(f"{format_vector(x)}: {f}" for f in fails)
    record("decomposition", msgs)
    return {"kind": inst.kind, "ok": not failures, "checks": ran, "seed": seed, "samples": samples, "failures": failures}


# -- command handlers ----------------------------------------------------------------

def _vector_arg(inst: Instance, text: str) -> RatVec:
    x = parse_vector(text)
    if len(x) != inst.ncols:
        raise CliError(f"vector has length {len(x)}, instance has dimension {inst.ncols}", EXIT_INPUT)
    return x


def _reactions_arg(inst: Instance, text: str) -> list[int]:
    try:
        nums = [int(s) for s in text.replace(" ", "").split(",") if s]
    except ValueError as exc:
        raise CliError(f"cannot parse reactions {text!r}", EXIT_INPUT) from exc
    for j in nums:
        if not 1 <= j <= inst.ncols:
            raise CliError(f"reaction {j} out of range 1..{inst.ncols}", EXIT_INPUT)
    return sorted(set(nums))


def cmd_enumerate(args) -> tuple[dict, int]:
    inst = load_instance(args.instance)
    return ev_document(inst, enumerate_instance(inst)), EXIT_OK


def cmd_decompose(args) -> tuple[dict, int]:
    inst = load_instance(args.instance)
    x = _vector_arg(inst, args.vector)
    bad = violation(inst, x)
    if bad is not None:
        raise CliError(f"vector is not a member: {bad}", EXIT_NONMEMBER)
    report, fails = decompose_instance(inst, x)
    if fails:
        report["failures"] = fails
        return report, EXIT_VERIFY
    return report, EXIT_OK


def cmd_check(args) -> tuple[dict, int]:
    inst = load_instance(args.instance)
    x = _vector_arg(inst, args.vector)
    value, reason = check_predicate(inst, x, args.predicate)
    return {"kind": inst.kind, "predicate": args.predicate, "vector": format_vector(x), "value": value, "reason": reason}, EXIT_OK


def cmd_knockout(args) -> tuple[dict, int]:
    inst = load_instance(args.instance)
    if inst.kind not in FLUX_KINDS:
        raise CliError(f"knockout needs a flux instance, got kind {inst.kind!r}", EXIT_INPUT)
    dead = _reactions_arg(inst, args.reactions)
    evs = enumerate_instance(inst)
    kept = knockout_evs(evs, [j - 1 for j in dead])
    doc = ev_document(inst, kept)
    counts = lambda e: {"conic": len(e.conic), **({"points": len(e.points)} if inst.family == "polyhedron" else {})}  # noqa: E731
    doc = {"kind": inst.kind, "reactions": dead, "before": counts(evs), "after": counts(kept),
           **{k: v for k, v in doc.items() if k != "kind"}}
    return doc, EXIT_OK


def cmd_dim(args) -> tuple[dict, int]:
    return instance_dim(load_instance(args.instance)), EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    report = verify_instance(load_instance(args.instance), args.samples, args.seed)
    return report, EXIT_OK if report["ok"] else EXIT_VERIFY


def cmd_random(args) -> tuple[dict, int]:
    rng = random.Random(args.seed)
    if args.kind == "s_cone":
        return scone_document(oracle.random_scone(rng, args.cols, args.rows)), EXIT_OK
    if args.kind == "cone":
        C = oracle.random_cone(rng, args.cols, args.rows)
        return {"kind": "cone", "dim": args.cols, "A": [format_vector(r) for r in C.A.rows]}, EXIT_OK
    P = oracle.random_polyhedron(rng, args.cols, args.rows)
    return {"kind": "polyhedron", "dim": args.cols, "A": [format_vector(r) for r in P.A_in.rows], "b": format_vector(P.b_in)}, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="elemvec", description="Elementary vectors and conformal decompositions over exact rationals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--output", help="write the JSON report to this path instead of stdout")
        return p

    p = add("enumerate", cmd_enumerate, "list elementary vectors")
    p.add_argument("instance")
    p = add("decompose", cmd_decompose, "conformal decomposition of a member vector")
    p.add_argument("instance")
    p.add_argument("--vector", required=True, help='comma-separated rationals, e.g. "2,1,1,1"')
    p = add("check", cmd_check, "test a special-vector predicate")
    p.add_argument("instance")
    p.add_argument("--vector", required=True)
    p.add_argument("--predicate", required=True, choices=("sm", "swnd", "cnd", "ex", "ve", "ccnd"))
    p = add("knockout", cmd_knockout, "filter elementary vectors of a flux instance by knocked-out reactions")
    p.add_argument("instance")
    p.add_argument("--reactions", default="", help='comma-separated 1-based reaction numbers, e.g. "4"')
    p = add("dim", cmd_dim, "dimension of the cone or polyhedron")
    p.add_argument("instance")
    p = add("verify", cmd_verify, "run the invariant suite on an instance")
    p.add_argument("instance")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p = add("random", cmd_random, "emit a random instance document")
    p.add_argument("--kind", choices=("s_cone", "cone", "polyhedron"), default="s_cone")
    p.add_argument("--cols", type=int, default=5)
    p.add_argument("--rows", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _glue_values(argv: list[str]) -> list[str]:
    # argparse takes "-1,0" for an option; bind it to its flag instead
    out, it = [], iter(argv)
    for a in it:
        if a in ("--vector", "--reactions"):
            out.append(f"{a}={next(it, '')}")
        else:
            out.append(a)
    return out


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        report, code = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotMemberError as exc:
        print(f"error: vector is not a member: {exc}", file=sys.stderr)
        return EXIT_NONMEMBER
    text = dumps(report)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
