"""
Command line interface: check, enumerate, tables, period, ingest.

Exit status is 0 on success, 2 for invalid input and 3 when an internal
cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import catalog
from .catalog import MalformedInputError, NotReflexiveError
from .lattice import InvalidInputError
from .polytope import NotConvexPositionError, ReflexivePolytope

log = logging.getLogger("toricsmooth")

EXIT_OK, EXIT_INVALID, EXIT_INVARIANT = 0, 2, 3


class InvariantViolation(RuntimeError):
    pass


def _error_kind(exc: Exception) -> str:
    if isinstance(exc, MalformedInputError):
        return "malformed-input"
    if isinstance(exc, NotConvexPositionError):
        return "not-convex-position"
    if isinstance(exc, NotReflexiveError):
        return "not-reflexive"
    return "invalid-input"


# ---------------------------------------------------------------------------
# decomposition specs
# ---------------------------------------------------------------------------

def _faces_for(P: ReflexivePolytope, selector: str, n_first: int) -> list[int]:
    sel = selector.strip()
    if sel == "*":
        return list(range(len(P.faces2)))
    if sel.isdigit():
        k = int(sel)
        if k >= len(P.faces2):
            raise InvalidInputError(f"face index {k} out of range")
        return [k]
    name, _, idx = sel.partition(":")
    if name not in ("first", "second"):
        raise InvalidInputError(f"unknown face selector {selector!r}")
    factor = 0 if name == "first" else 1
    faces = [(k, w) for k, f, w in catalog.hexagon_faces(P, n_first) if f == factor]
    if not idx:
        return [k for k, _ in faces]
    # vertices of the other factor in sorted order
    others = sorted({w for _, w in faces})
    try:
        target = others[int(idx)]
    except (ValueError, IndexError):
        raise InvalidInputError(f"bad vertex index in selector {selector!r}") from None
    return [k for k, w in faces if w == target]


def _pick_option(options, preset, k: int):
    tri = [sum(m.kind == "triangle" for m in o) for o in options]
    if preset == "segments":
        want = min(tri)
    elif preset == "triangles":
        want = max(tri)
    elif preset == "pair-of-triangles":
        want = 2
    elif isinstance(preset, int) and not isinstance(preset, bool):
        want = 2 * preset
    else:
        raise InvalidInputError(f"unknown preset {preset!r}")
    for o, t in zip(options, tri):
        if t == want:
            return o
    raise InvalidInputError(f"2-face {k} has no decomposition matching preset {preset!r}")


def decomposition_from_spec(P: ReflexivePolytope, spec: dict | None, n_first: int = 2):
    """Build D from a {face_selector: preset} mapping.

    Faces not named take their decomposition with the fewest triangles.
    Selectors are applied from general to specific: "*", then "first" and
    "second" (optionally ":i" for the i-th vertex of the other factor), then
    plain face indices.
    """
    from .minkowski import StandardDecomposition, face_options

    options = face_options(P)
    for k, o in enumerate(options):
        if not o:
            raise InvalidInputError(f"2-face {k} admits no standard decomposition")
    parts = [_pick_option(o, "segments", k) for k, o in enumerate(options)]

    def rank(sel):
        s = sel.strip()
        return 0 if s == "*" else (2 if s.isdigit() else 1)

    for sel, preset in sorted((spec or {}).items(), key=lambda kv: (rank(kv[0]), kv[0])):
        for k in _faces_for(P, sel, n_first):
            parts[k] = _pick_option(options[k], preset, k)
    return StandardDecomposition(P, parts)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _load_json_arg(value):
    if value is None:
        return None
    p = Path(value)
    text = p.read_text() if p.exists() else value
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON: {exc}") from None


def _resolve_polytope(arg: str) -> tuple[ReflexivePolytope, int]:
    """A builtin pair "k1,k2" or a polytope file; returns P and the first factor's dimension."""
    if Path(arg).exists():
        p = catalog.parse_polytope_file(arg)
        return catalog.require_reflexive(p), 2
    parts = [s for s in arg.split(",") if s.strip()]
    if len(parts) != 2:
        raise InvalidInputError(f"expected a pair like '6,6' or a polytope file, got {arg!r}")
    return catalog.product_polytope(parts[0], parts[1]), 2


def cross_check(report) -> None:
    if report.chi % 2:
        raise InvariantViolation(f"odd Euler characteristic {report.chi}")
    if report.positives - report.negatives != report.chi:
        raise InvariantViolation("positive/negative vertex counts disagree with chi")
    if report.b2 != report.gamma - 3 or report.b2 < 1:
        raise InvariantViolation(f"b2 = {report.b2} violates b2 = gamma - 3 >= 1")


def _emit(obj, out):
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_check(args) -> int:
    from .invariants import invariant_report

    P, n_first = _resolve_polytope(args.polytope)
    spec = _load_json_arg(args.decomposition)
    if spec is not None and not isinstance(spec, dict):
        raise MalformedInputError("decomposition spec must be a JSON object")
    D = decomposition_from_spec(P, spec, n_first)
    rep = invariant_report(P, D, seed=args.seed)
    cross_check(rep)
    out = rep.to_dict()
    out["seed"] = args.seed
    _emit(out, args.out)
    return EXIT_OK


def _orbit_report(job):
    k1, k2, code, seed, orbit = job
    from .invariants import invariant_report
    from .symmetry import DecompositionSpace

    P = catalog.product_polytope(k1, k2)
    D = DecompositionSpace(P).decomposition(code)
    return invariant_report(P, D, orbit=orbit, seed=seed).to_dict()


def cmd_enumerate(args) -> int:
    from .symmetry import DecompositionSpace, orbits

    pairs = catalog.product_family() if args.pair == "all" else [tuple(args.pair.split(","))]
    rows = []
    for k1, k2 in pairs:
        P = catalog.product_polytope(k1, k2)
        part = orbits(P)
        space = DecompositionSpace(P)
        jobs = [(k1, k2, space.code_of(D), args.seed, i) for i, D in enumerate(part.representatives)]
        if args.workers > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                reports = list(pool.map(_orbit_report, jobs))
        else:
            reports = [_orbit_report(j) for j in jobs]
        for rep, size in zip(reports, part.orbit_sizes):
            rep["orbit_size"] = size
            rows.append(rep)
        log.info("%s: %d decompositions, %d orbits", P.name, sum(part.orbit_sizes), len(part))
    for r in rows:
        if r["chi"] % 2 or r["positives"] - r["negatives"] != r["chi"] or r["b2"] < 1:
            raise InvariantViolation(f"cross-check failed for {r['polytope']} orbit {r['orbit']}")
    _emit({"seed": args.seed, "reports": rows}, args.out)
    return EXIT_OK


def cmd_tables(args) -> int:
    families = catalog.FAMILIES if args.family == "all" else [args.family]
    out = Path(args.out) if args.out else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    for fam in families:
        if fam not in catalog.FAMILIES:
            raise InvalidInputError(f"unknown family {fam!r}")
        text = catalog.emit_tables(fam, args.format, out, seed=args.seed, all_verdicts=args.all_verdicts)
        if out is None:
            if len(families) > 1:
                sys.stdout.write(f"# {fam}\n")
            sys.stdout.write(text)
    return EXIT_OK


def cmd_period(args) -> int:
    labels = [s for s in args.polygons.split(",") if s.strip()]
    if not labels:
        raise InvalidInputError("no polygon labels given")
    f = catalog.period_polynomial(labels[0])
    for lab in labels[1:]:
        f = f * catalog.period_polynomial(lab)
    _emit({"polygons": labels, "N": args.N, "periods": catalog.period_sequence(f, args.N)}, args.out)
    return EXIT_OK


def cmd_ingest(args) -> int:
    p = catalog.parse_polytope_file(args.path)
    data = catalog.polytope_to_json(p)
    if args.require_reflexive:
        catalog.require_reflexive(p)
    from .polytope import polar_dual

    data["reflexive"] = bool(p.origin_interior and polar_dual(p).reflexive)
    if p.dim == 2:
        data["label"] = catalog.polygon_label(p)
    _emit(data, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="toricsmooth", description=__doc__.strip().splitlines()[0])
    ap.add_argument("--config", help="JSON file with default option values")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("check", help="invariant report for one polytope and decomposition")
    c.add_argument("polytope", help="builtin pair such as 6,6 or a polytope file")
    c.add_argument("-d", "--decomposition", help="decomposition spec: JSON text or file")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("-o", "--out")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("enumerate", help="orbit-deduplicated sweep of a product family")
    e.add_argument("pair", help="a pair such as 6,6, or 'all'")
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("-o", "--out")
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("tables", help="reproduce the invariant tables")
    t.add_argument("family", help=f"one of {', '.join(catalog.FAMILIES)} or 'all'")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--all-verdicts", action="store_true", help="keep irregular rows too")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("-o", "--out", help="output directory")
    t.set_defaults(func=cmd_tables)

    p = sub.add_parser("period", help="period sequence of a product of polygon polynomials")
    p.add_argument("polygons", help="labels such as 9,9")
    p.add_argument("-N", type=int, default=6)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_period)

    i = sub.add_parser("ingest", help="read a JSON or matrix polytope file and print canonical JSON")
    i.add_argument("path")
    i.add_argument("--require-reflexive", action="store_true")
    i.add_argument("-o", "--out")
    i.set_defaults(func=cmd_ingest)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.config:
        try:
            conf = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            print(json.dumps({"error": "malformed-input", "message": str(exc)}), file=sys.stderr)
            return EXIT_INVALID
        given = set(a[2:].replace("-", "_") for a in (argv if argv is not None else sys.argv[1:]) if a.startswith("--"))
        for key, val in conf.items():
            key = key.replace("-", "_")
            if hasattr(args, key) and key not in given:
                setattr(args, key, val)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(json.dumps({"error": "invariant-violation", "message": str(exc)}), file=sys.stderr)
        return EXIT_INVARIANT
    except (InvalidInputError, OSError) as exc:
        print(json.dumps({"error": _error_kind(exc), "message": str(exc)}), file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
