"""
Reflexive polygons, their products, period sequences and file ingestion.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from pathlib import Path
from typing import Mapping

from .lattice import (
    InvalidInputError,
    convex_hull_2d,
    linear_normal_form,
    pick_counts,
    point_in_polygon,
)
from .minkowski import enumerate_summand_decompositions
from .polytope import LatticePolytope, NotConvexPositionError, ReflexivePolytope, polar_dual, product


class MalformedInputError(InvalidInputError):
    """Unparseable JSON or matrix text."""


class NotReflexiveError(InvalidInputError):
    """A polytope that is required to be reflexive is not."""


# Labels follow the number of boundary lattice points, so that the polar of
# P_k has normalized area 12 - k.  "8" is the square, "8'" the trapezoid;
# "6'" is the pentagon that also decomposes into standard simplices.
_POLYGONS: dict[str, tuple[tuple[int, int], ...]] = {
    "4": ((1, 0), (0, 1), (-1, 0), (0, -1)),
    "5": ((1, 0), (1, 1), (0, 1), (-1, 0), (0, -1)),
    "6": ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)),
    "6'": ((-1, -1), (1, -1), (1, 0), (0, 1), (-1, 0)),
    "7": ((1, -1), (1, 1), (-1, 1), (-1, 0), (0, -1)),
    "8": ((1, 1), (-1, 1), (-1, -1), (1, -1)),
    "8'": ((-1, -1), (2, -1), (0, 1), (-1, 1)),
    "9": ((2, -1), (-1, 2), (-1, -1)),
}
SD_LABELS = ("4", "5", "6", "7", "8", "8'", "9")  # the labelled family used by the tables
EXTRA_SD_LABELS = ("6'",)


def normalize_label(k) -> str:
    s = str(k).strip().replace("′", "'")
    if s.startswith("P"):
        s = s[1:]
    return s


def builtin_polygon(k) -> LatticePolytope:
    """The reflexive polygon P_k for a label in {4, 5, 6, 6', 7, 8, 8', 9}."""
    lab = normalize_label(k)
    if lab not in _POLYGONS:
        raise InvalidInputError(f"unknown polygon label {k!r}")
    return LatticePolytope(_POLYGONS[lab], name=f"P{lab}")


def polygon_label(poly: LatticePolytope) -> str | None:
    nf = linear_normal_form(poly.vertices)
    for lab, verts in _POLYGONS.items():
        if linear_normal_form(verts) == nf:
            return lab
    return None


@lru_cache(maxsize=1)
def reflexive_polygons() -> tuple[tuple[tuple[int, int], ...], ...]:
    """One representative of each of the reflexive polygons, up to GL(2, Z).

    Lattice polygons with the origin as their only interior lattice point
    are grown from triangles by adding one point of the box [-2, 2]^2 at a
    time; a polygon with a second interior point is never extended, since
    adding points cannot remove interior points.  The box holds a copy of
    every class.
    """
    box = [(x, y) for x in range(-2, 3) for y in range(-2, 3)]

    def admissible(h):
        if point_in_polygon((0, 0), h) < 0:
            return None
        _, inner = pick_counts(h)
        if inner == 0:
            return False
        if inner == 1 and point_in_polygon((0, 0), h) == 1:
            return True
        return None

    seen: set = set()
    stack = []
    for tri in itertools.combinations(box, 3):
        h = tuple(convex_hull_2d(tri))
        if len(h) == 3 and h not in seen and admissible(h) is not None:
            seen.add(h)
            stack.append(h)
    classes: dict = {}
    while stack:
        h = stack.pop()
        if admissible(h):
            nf = linear_normal_form(h)
            classes.setdefault(nf, h)
        for v in box:
            if point_in_polygon(v, h) >= 0:
                continue
            h2 = tuple(convex_hull_2d(h + (v,)))
            if h2 not in seen and admissible(h2) is not None:
                seen.add(h2)
                stack.append(h2)
    return tuple(sorted(classes.keys(), key=lambda p: (pick_counts(p)[0], len(p), p)))


def is_sd_polygon(verts) -> bool:
    return bool(enumerate_summand_decompositions(convex_hull_2d(verts)))


def list_sd_reflexive_polygons() -> list[tuple[tuple[int, int], ...]]:
    """Reflexive polygons (normal forms) that decompose into standard simplices."""
    return [p for p in reflexive_polygons() if is_sd_polygon(p)]


def product_family(labels=SD_LABELS) -> list[tuple[str, str]]:
    """Unordered label pairs with repetition."""
    return list(itertools.combinations_with_replacement(labels, 2))


def product_polytope(k1, k2) -> ReflexivePolytope:
    return _product_polytope(normalize_label(k1), normalize_label(k2))


@lru_cache(maxsize=64)
def _product_polytope(a: str, b: str) -> ReflexivePolytope:
    return ReflexivePolytope(product(builtin_polygon(a), builtin_polygon(b)), name=f"P{a},{b}")


# ---------------------------------------------------------------------------
# period sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaurentPoly:
    terms: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, ...], int]) -> "LaurentPoly":
        return cls(tuple(sorted((tuple(e), int(c)) for e, c in d.items() if c)))

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    @property
    def nvars(self) -> int:
        return len(self.terms[0][0]) if self.terms else 0

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        """Product in disjoint variables (tensor product)."""
        return LaurentPoly.from_dict({a + b: c * d for a, c in self.terms for b, d in other.terms})

    def __str__(self):
        parts = []
        for e, c in self.terms:
            mono = "*".join(f"x{i}^{x}" for i, x in enumerate(e) if x) or "1"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts) or "0"


def binomial_edge_polynomial(verts, constant: int = 0) -> LaurentPoly:
    """Binomial coefficients C(l, j) along each edge of length l; other points get 0."""
    poly = convex_hull_2d(verts)
    coeffs: dict = {}
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        ell = gcd(b[0] - a[0], b[1] - a[1])
        step = ((b[0] - a[0]) // ell, (b[1] - a[1]) // ell)
        for j in range(ell + 1):
            coeffs[(a[0] + j * step[0], a[1] + j * step[1])] = comb(ell, j)
    if constant:
        coeffs[(0, 0)] = constant
    return LaurentPoly.from_dict(coeffs)


def period_polynomial(k, constant: int = 0) -> LaurentPoly:
    """f_k, supported on the polar of P_k (the polygon of monomials of the mirror)."""
    pd = polar_dual(builtin_polygon(k))
    return binomial_edge_polynomial(pd.polytope.vertices, constant)


def period_sequence(f: LaurentPoly, N: int) -> list[int]:
    """Constant terms of f^0, ..., f^N by exact expansion."""
    if N < 0:
        raise InvalidInputError("N must be non-negative")
    zero = (0,) * f.nvars
    out = [1]
    power: dict = {zero: 1}
    terms = f.terms
    for _ in range(N):
        nxt: Counter = Counter()
        for e, c in power.items():
            for e2, c2 in terms:
                nxt[tuple(x + y for x, y in zip(e, e2))] += c * c2
        power = {e: c for e, c in nxt.items() if c}
        out.append(power.get(zero, 0))
    return out


# ---------------------------------------------------------------------------
# ingestion
# ---------------------------------------------------------------------------

def polytope_from_json(data: Mapping) -> LatticePolytope:
    try:
        verts = [[int(x) for x in v] for v in data["vertices"]]
        name = str(data.get("name", ""))
        dim = int(data.get("dim", len(verts[0]) if verts else 0))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise MalformedInputError(f"bad polytope JSON: {exc}") from None
    if any(len(v) != dim for v in verts):
        raise MalformedInputError("vertex length does not match 'dim'")
    return LatticePolytope(verts, name=name)


def parse_polytope_file(path) -> LatticePolytope:
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"invalid JSON: {exc}") from None
        return polytope_from_json(data)
    return parse_ks_matrix(text, name=Path(path).stem)


def parse_ks_matrix(text: str, name: str = "") -> LatticePolytope:
    """PALP-style matrix: a "rows cols" header, then the integer entries.

    A matrix with fewer rows than columns lists vertices as columns.
    """
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MalformedInputError("empty matrix text")
    try:
        head = lines[0].split()
        r, c = int(head[0]), int(head[1])
        rows = [[int(x) for x in ln.split()] for ln in lines[1:1 + r]]
    except (ValueError, IndexError):
        raise MalformedInputError("matrix header must be 'rows cols' followed by integers") from None
    if len(rows) != r or any(len(row) != c for row in rows):
        raise MalformedInputError(f"expected a {r}x{c} integer matrix")
    verts = [list(col) for col in zip(*rows)] if r < c else rows
    return LatticePolytope(verts, name=name)


def polytope_to_json(p: LatticePolytope) -> dict:
    return {"name": p.name, "dim": p.ambient_dim, "vertices": [list(v) for v in p.vertices]}


def require_reflexive(p: LatticePolytope) -> ReflexivePolytope:
    if p.dim != 4:
        raise InvalidInputError("expected a 4-dimensional polytope")
    if not p.origin_interior or not polar_dual(p).reflexive:
        raise NotReflexiveError(f"{p.name or 'polytope'} is not reflexive")
    return ReflexivePolytope(p, name=p.name)


# ---------------------------------------------------------------------------
# table emission
# ---------------------------------------------------------------------------

FAMILIES = ("P66-orbits", "P66-invariants", "P6k", "P65", "P64", "Psingle")

# Reference rows: (k1, k2, configuration) -> (chi, b2, vol_polar, orbits).
# Psingle rows carry no configuration and no orbit count.
REFERENCE_ROWS: dict[tuple, tuple] = {
    (6, 7, "(0)"): (-90, 2, 30, 1),
    (6, 7, "(2)"): (-86, 1, 30, 6),
    (6, 7, "(3)"): (-84, 1, 30, 6),
    (6, 7, "(5)"): (-80, 3, 30, 1),
    (6, 8, "(0)"): (-120, 2, 24, 1),
    (6, 8, "(2)"): (-116, 1, 24, 2),
    (6, 8, "(4)"): (-112, 3, 24, 1),
    (6, 9, "(0)"): (-162, 2, 18, 1),
    (6, 9, "(3)"): (-156, 3, 18, 1),
    (6, 6, "(2,2)"): (-64, 1, 36, 6),
    (6, 6, "(2,3)"): (-62, 1, 36, 6),
    (6, 6, "(2,4)"): (-60, 1, 36, 9),
    (6, 6, "(3,3)"): (-60, 1, 36, 6),
    (6, 6, "(3,4)"): (-58, 1, 36, 9),
    (6, 6, "(4,4)"): (-56, 1, 36, 6),
    (6, 6, "(0,2)"): (-68, 2, 36, 3),
    (6, 6, "(0,3)"): (-66, 2, 36, 3),
    (6, 6, "(0,4)"): (-64, 2, 36, 3),
    (6, 6, "(0,0)"): (-72, 3, 36, 1),
    (6, 6, "(2,6)"): (-56, 3, 36, 3),
    (6, 6, "(3,6)"): (-54, 3, 36, 3),
    (6, 6, "(4,6)"): (-52, 3, 36, 3),
    (6, 6, "(0,6)"): (-60, 4, 36, 1),
    (6, 6, "(6,6)"): (-48, 5, 36, 1),
    (6, 5, "(0,0),0"): (-90, 3, 42, 1),
    (6, 5, "(0,0),2"): (-86, 2, 42, 2),
    (6, 5, "(0,0),3"): (-84, 2, 42, 1),
    (6, 5, "(0,1),1"): (-86, 2, 42, 3),
    (6, 5, "(0,1),2"): (-84, 2, 42, 3),
    (6, 5, "(0,1),3"): (-82, 2, 42, 1),
    (6, 5, "(1,1),0"): (-86, 2, 42, 1),
    (6, 5, "(1,1),1"): (-84, 2, 42, 2),
    (6, 5, "(1,1),2"): (-82, 2, 42, 2),
    (6, 5, "(1,1),3"): (-80, 2, 42, 1),
    (6, 5, "(0,2),0"): (-86, 2, 42, 1),
    (6, 5, "(0,2),1"): (-84, 2, 42, 3),
    (6, 5, "(0,2),2"): (-82, 2, 42, 3),
    (6, 5, "(0,2),3"): (-80, 2, 42, 1),
    (6, 5, "(1,2),0"): (-84, 2, 42, 1),
    (6, 5, "(1,2),1"): (-82, 2, 42, 3),
    (6, 5, "(1,2),2"): (-80, 2, 42, 3),
    (6, 5, "(1,2),3"): (-78, 2, 42, 1),
    (6, 5, "(2,2),0"): (-82, 2, 42, 1),
    (6, 5, "(2,2),1"): (-80, 2, 42, 2),
    (6, 5, "(2,2),3"): (-76, 4, 42, 1),
    (6, 4, "(0,0,0,0)"): (-72, 2, 48, 1),
    (6, 4, "(0,0,1,1)"): (-68, 1, 48, 2),
    (6, 4, "(0,1,1,1)"): (-66, 1, 48, 1),
    (6, 4, "(1,1,1,1)"): (-64, 1, 48, 1),
    (6, 4, "(0,0,0,2)"): (-68, 1, 48, 1),
    (6, 4, "(0,0,2,2)"): (-64, 1, 48, 2),
    (6, 4, "(0,2,2,2)"): (-60, 1, 48, 1),
    (6, 4, "(2,2,2,2)"): (-56, 3, 48, 1),
    (6, 4, "(0,0,1,2)"): (-66, 1, 48, 2),
    (6, 4, "(0,1,1,2)"): (-64, 1, 48, 2),
    (6, 4, "(1,1,1,2)"): (-62, 1, 48, 1),
    (6, 4, "(0,1,2,2)"): (-62, 1, 48, 2),
    (6, 4, "(1,1,2,2)"): (-60, 1, 48, 2),
    (4, 4, ""): (-64, 1, 64, None),
    (4, 5, ""): (-60, 2, 56, None),
    (4, 7, ""): (-100, 1, 40, None),
    (4, 8, ""): (-144, 1, 32, None),
    (4, 9, ""): (-204, 1, 24, None),
    (5, 5, ""): (-56, 3, 49, None),
    (5, 7, ""): (-90, 2, 35, None),
    (5, 8, ""): (-128, 2, 28, None),
    (5, 9, ""): (-180, 2, 21, None),
    (7, 7, ""): (-100, 1, 25, None),
    (7, 8, ""): (-120, 1, 20, None),
    (7, 9, ""): (-150, 1, 15, None),
    (8, 8, ""): (-128, 1, 16, None),
    (8, 9, ""): (-144, 1, 12, None),
    (9, 9, ""): (-144, 1, 9, None),
}

FAMILY_PAIRS = {
    "P6k": [(6, 6), (6, 7), (6, 8), (6, 9)],
    "P65": [(6, 5)],
    "P64": [(6, 4)],
    "Psingle": [p for p in itertools.combinations_with_replacement((4, 5, 7, 8, 9), 2)],
}


def hexagon_faces(P: ReflexivePolytope, n_first: int = 2) -> list[tuple[int, int, int]]:
    """2-faces of a product of the form Q x {w} or {v} x Q.

    Returns (face index, factor, other-factor vertex index) triples, where
    factor 0 means the face spans the first polygon.
    """
    out = []
    for k, f in enumerate(P.faces2):
        first = {P.vertices[i][:n_first] for i in f}
        second = {P.vertices[i][n_first:] for i in f}
        if len(second) == 1:
            out.append((k, 0, next(iter(second))))
        elif len(first) == 1:
            out.append((k, 1, next(iter(first))))
    return out


def _triangles(part) -> int:
    return sum(m.kind == "triangle" for m in part)


def configuration_labeler(P: ReflexivePolytope, k1: int, k2: int):
    """A function D -> configuration string for the P_{6,k} families."""
    hexes = [(k, factor, w) for k, factor, w in hexagon_faces(P) if len(P.faces2[k]) == 6]
    if k1 == 6 and k2 == 6:
        def label(D):
            n = [0, 0]
            for k, factor, _ in hexes:
                # factor 0 is P6 x {w}; counted in the second slot
                n[1 - factor] += _triangles(D.parts[k]) > 0
            return "({},{})".format(*sorted(n))
        return label
    hexes = [h for h in hexes if h[1] == 0]
    scales = {k: P.scaled_faces[k].scale for k, _, _ in hexes}
    if k2 == 5:
        def label(D):
            doubled = sorted(_triangles(D.parts[k]) // 2 for k, _, _ in hexes if scales[k] == 2)
            m = sum(_triangles(D.parts[k]) > 0 for k, _, _ in hexes if scales[k] == 1)
            return "({},{}),{}".format(*doubled, m)
        return label
    if k2 == 4:
        def label(D):
            vals = sorted(_triangles(D.parts[k]) // 2 for k, _, _ in hexes)
            return "(" + ",".join(map(str, vals)) + ")"
        return label

    def label(D):
        return f"({sum(_triangles(D.parts[k]) > 0 for k, _, _ in hexes)})"
    return label


@dataclass
class TableRow:
    k1: int
    k2: int
    configuration: str
    chi: int
    b2: int
    vol_polar: int
    orbits: int | None
    regular_orbits: int
    flag: str = ""

    def key(self):
        return (self.k1, self.k2, self.configuration)


def _pair_rows(k1: int, k2: int, seed: int = 0) -> list[TableRow]:
    from .invariants import euler_characteristic, gamma
    from .minkowski import enumerate_decomposition_data
    from .regularity import decide_regularity
    from .symmetry import orbits

    P = product_polytope(k1, k2)
    vol = P.dual.volume()
    if 6 not in (k1, k2):
        D = next(iter(enumerate_decomposition_data(P)))
        reg = decide_regularity(P, D, seed=seed).status == "regular"
        return [TableRow(k1, k2, "", euler_characteristic(P, D), gamma(P, D) - 3, vol, None, int(reg))]
    label = configuration_labeler(P, k1, k2)
    part = orbits(P, label=label)
    groups: dict = {}
    for D, lab in zip(part.representatives, part.class_labels):
        reg = decide_regularity(P, D, seed=seed).status == "regular"
        inv = (euler_characteristic(P, D), gamma(P, D) - 3)
        groups.setdefault(lab, []).append((inv, reg))
    rows = []
    for lab, items in groups.items():
        for inv in sorted({inv for inv, _ in items}):
            n = sum(1 for i, _ in items if i == inv)
            r = sum(1 for i, reg in items if i == inv and reg)
            rows.append(TableRow(k1, k2, lab, inv[0], inv[1], vol, n, r))
    return rows


def family_rows(family: str, seed: int = 0, all_verdicts: bool = False) -> list[TableRow]:
    """Rows for one of the P6k, P65, P64 and Psingle families, with discrepancy flags.

    A row is kept when some orbit in it is regular (all rows when
    ``all_verdicts``).  Flags: ``partial`` when only some orbits of the row
    are regular, ``extra`` for a regular row absent from the reference,
    ``mismatch`` when values differ from the reference and ``missing`` for a
    reference row that no regular orbit reproduces.
    """
    if family not in FAMILY_PAIRS:
        raise InvalidInputError(f"unknown row family {family!r}")
    rows = []
    for k1, k2 in FAMILY_PAIRS[family]:
        rows.extend(_pair_rows(k1, k2, seed))
    ref = {k: v for k, v in REFERENCE_ROWS.items() if (k[0], k[1]) in FAMILY_PAIRS[family]}
    out, seen = [], set()
    for row in rows:
        expected = ref.get(row.key())
        flags = []
        if row.regular_orbits:
            if 0 < row.regular_orbits < (row.orbits or 1):
                flags.append("partial")
            if expected is None:
                flags.append("extra")
            elif expected != (row.chi, row.b2, row.vol_polar, row.orbits):
                flags.append("mismatch")
            else:
                seen.add(row.key())
        elif not all_verdicts:
            continue
        row.flag = ";".join(flags)
        out.append(row)
    for key, (chi, b2, vol, n) in ref.items():
        if key not in seen and not any(r.key() == key and "mismatch" in r.flag for r in out):
            out.append(TableRow(key[0], key[1], key[2], chi, b2, vol, n, 0, "missing"))
    out.sort(key=lambda r: (r.k1, -r.k2 if r.k1 == 6 else r.k2, _config_sort(r.configuration), r.chi))
    return out


def _config_sort(cfg: str):
    return tuple(int(x) for x in cfg.replace("(", " ").replace(")", " ").replace(",", " ").split())


def p66_matrices(seed: int = 0) -> tuple[list[list[int | None]], list[list[tuple[int, int] | None]]]:
    """Orbit counts and (b2, chi) per (n1, n2) class of P6 x P6, upper triangular."""
    from .invariants import euler_characteristic, gamma
    from .symmetry import orbits

    P = product_polytope(6, 6)
    label = configuration_labeler(P, 6, 6)
    part = orbits(P, label=label)
    counts: list[list] = [[None] * 7 for _ in range(7)]
    invs: list[list] = [[None] * 7 for _ in range(7)]
    for D, lab in zip(part.representatives, part.class_labels):
        a, b = _config_sort(lab)
        counts[a][b] = (counts[a][b] or 0) + 1
        inv = (gamma(P, D) - 3, euler_characteristic(P, D))
        if invs[a][b] is not None and invs[a][b] != inv:
            raise AssertionError(f"class {lab} is not constant")
        invs[a][b] = inv
    return counts, invs


ROW_COLUMNS = ["k1k2", "chi", "b2", "vol_polar", "orbits", "configuration", "regular_orbits", "flag"]


def _row_record(r: TableRow) -> dict:
    return {
        "k1k2": f"({r.k1},{r.k2})",
        "chi": r.chi,
        "b2": r.b2,
        "vol_polar": r.vol_polar,
        "orbits": r.orbits,
        "configuration": r.configuration,
        "regular_orbits": r.regular_orbits,
        "flag": r.flag,
    }


def table_records(family: str, seed: int = 0, all_verdicts: bool = False) -> tuple[list[str], list[dict]]:
    """Column names and records for a family, ready for serialization."""
    if family in ("P66-orbits", "P66-invariants"):
        counts, invs = p66_matrices(seed)
        cols = ["n1"] + [f"n2={j}" for j in range(7)]
        recs = []
        for i in range(7):
            rec: dict = {"n1": i}
            for j in range(7):
                if family == "P66-orbits":
                    rec[f"n2={j}"] = counts[i][j]
                else:
                    rec[f"n2={j}"] = None if invs[i][j] is None else f"({invs[i][j][0]},{invs[i][j][1]})"
            recs.append(rec)
        return cols, recs
    if family not in FAMILIES:
        raise InvalidInputError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return ROW_COLUMNS, [_row_record(r) for r in family_rows(family, seed, all_verdicts)]


def render_table(cols: list[str], recs: list[dict], fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps(recs, indent=2, sort_keys=False) + "\n"
    if fmt != "csv":
        raise InvalidInputError(f"unknown format {fmt!r}")
    import csv
    import io

    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    for rec in recs:
        w.writerow({k: "" if v is None else v for k, v in rec.items()})
    return buf.getvalue()


def emit_tables(family: str, fmt: str = "csv", out=None, seed: int = 0, all_verdicts: bool = False) -> str:
    """Render one family; write it to ``out`` (a path or directory) when given."""
    cols, recs = table_records(family, seed, all_verdicts)
    text = render_table(cols, recs, fmt)
    if out is not None:
        path = Path(out)
        if path.is_dir():
            path = path / f"{family}.{fmt}"
        path.write_text(text)
    return text


__all__ = [
    "FAMILIES",
    "LaurentPoly",
    "MalformedInputError",
    "NotConvexPositionError",
    "NotReflexiveError",
    "builtin_polygon",
    "emit_tables",
    "list_sd_reflexive_polygons",
    "parse_ks_matrix",
    "parse_polytope_file",
    "period_polynomial",
    "period_sequence",
    "product_family",
    "product_polytope",
    "reflexive_polygons",
]
