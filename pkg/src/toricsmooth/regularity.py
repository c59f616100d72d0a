"""
Consistency of slope functions and the regularity decision for (P, D).

A slope function assigns a rational number V(m) to every summand m of D.
For a 2-face sigma of P° the values of the summands matched with the edges
of sigma determine a piecewise linear function psi on the boundary lattice
points of the scaled face; the pair is regular when some consistent,
strictly convex V makes the lower hull of every such psi free of empty
non-unimodular cells.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .lattice import (
    InvalidInputError,
    affine_equivalent,
    content,
    cross2,
    feasible_point,
    kernel,
    lower_hull_subdivision,
    polygon_lattice_points,
    sub,
)
from .minkowski import EdgeMatching, StandardDecomposition, edge_matching, edge_profile
from .polytope import ReflexivePolytope


class PreconditionError(InvalidInputError):
    """A slope function is not consistent or not strictly convex."""


@dataclass
class OrientationData:
    """Orientations of the edges and 2-faces of P°.

    The default orientation of an edge runs from its lower-indexed vertex to
    the higher one; the default orientation of a 2-face is counter-clockwise
    in its scaled-face basis.  ``edge_flip``/``face_flip`` reverse them.
    """

    edge_flip: list[bool]
    face_flip: list[bool]
    sgn: dict[tuple[int, int], int]
    summand_order: dict[int, list[int]] = field(default_factory=dict)

    def edge_sign(self, Q: ReflexivePolytope, t: int, a: int, b: int) -> int:
        """+1 if traversing edge t from vertex a to b follows its orientation."""
        s = 1 if a < b else -1
        return -s if self.edge_flip[t] else s


def build_orientation(P: ReflexivePolytope, seed: int | None = None) -> OrientationData:
    """Deterministic orientation data; a seed draws random flips instead."""
    Q = P.dual
    if seed is None:
        ef = [False] * len(Q.edges)
        ff = [False] * len(Q.faces2)
    else:
        rng = random.Random(seed)
        ef = [rng.random() < 0.5 for _ in Q.edges]
        ff = [rng.random() < 0.5 for _ in Q.faces2]
    o = OrientationData(ef, ff, {})
    for s, sf in enumerate(Q.scaled_faces):
        for a, b in sf.cycle_edges:
            t = Q.index(frozenset((a, b)))
            sg = o.edge_sign(Q, t, a, b)
            o.sgn[(s, t)] = -sg if ff[s] else sg
    return o


@dataclass
class ConsistencySpace:
    ambient_dim: int
    basis: list[list[Fraction]]
    rows: list[dict[int, int]]

    @property
    def offset(self) -> list[Fraction]:
        return [Fraction(0)] * self.ambient_dim

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, V: Sequence) -> bool:
        return all(sum(c * V[i] for i, c in r.items()) == 0 for r in self.rows)

    def point(self, coeffs: Sequence) -> list[Fraction]:
        out = [Fraction(0)] * self.ambient_dim
        for c, b in zip(coeffs, self.basis):
            if c:
                for i, x in enumerate(b):
                    if x:
                        out[i] += c * x
        return out

    def restrict(self, form: dict[int, int | Fraction]) -> list[Fraction]:
        """A linear form on slope functions, as a form on basis coordinates."""
        return [sum((Fraction(c) * b[i] for i, c in form.items()), Fraction(0)) for b in self.basis]


def consistency_rows(P: ReflexivePolytope, D: StandardDecomposition, orient: OrientationData,
                     em: EdgeMatching | None = None) -> list[dict[int, int]]:
    em = em or edge_matching(P, D)
    Q = P.dual
    idx = D.summand_index
    rows = []
    for s, sigma in enumerate(Q.faces2):
        row: dict[int, int] = {}
        for t in Q.edges_of(sigma):
            rho = Q.edge_dual[t]
            for j in em.S[(s, t)]:
                i = idx[(rho, j)]
                row[i] = row.get(i, 0) + orient.sgn[(s, t)]
        rows.append({i: c for i, c in row.items() if c})
    return rows


def consistency_space(P: ReflexivePolytope, D: StandardDecomposition,
                      orient: OrientationData | None = None) -> ConsistencySpace:
    orient = orient or build_orientation(P)
    rows = consistency_rows(P, D, orient)
    return ConsistencySpace(D.n_summands, kernel(rows, D.n_summands), rows)


# ---------------------------------------------------------------------------
# boundary functions on scaled faces of P°
# ---------------------------------------------------------------------------

@dataclass
class FaceWalk:
    """Counter-clockwise unit steps around the scaled 2-face ``s`` of P°.

    ``steps`` holds, per edge, the traversal sign and the global summand
    indices matched with that edge.
    """

    s: int
    points: list[tuple[int, int]]  # boundary lattice points, ccw, starting at a vertex
    steps: list[tuple[int, list[int]]]


def face_walks(P: ReflexivePolytope, D: StandardDecomposition, orient: OrientationData,
               em: EdgeMatching | None = None) -> list[FaceWalk]:
    em = em or edge_matching(P, D)
    Q = P.dual
    idx = D.summand_index
    out = []
    for s, sf in enumerate(Q.scaled_faces):
        pts: list[tuple[int, int]] = []
        steps = []
        poly = sf.polygon
        for i, (a, b) in enumerate(sf.cycle_edges):
            t = Q.index(frozenset((a, b)))
            rho = Q.edge_dual[t]
            ms = [idx[(rho, j)] for j in em.S[(s, t)]]
            p, q = poly[i], poly[(i + 1) % len(poly)]
            n = len(ms)
            if n != content(sub(q, p)):
                raise InvalidInputError(f"edge {t} of 2-face {s} has {n} matched summands")
            pts.extend((p[0] + (q[0] - p[0]) * r // n, p[1] + (q[1] - p[1]) * r // n) for r in range(n))
            steps.append((orient.edge_sign(Q, t, a, b), ms))
        out.append(FaceWalk(s, pts, steps))
    return out


def boundary_heights(walk: FaceWalk, V: Sequence) -> dict[tuple[int, int], Fraction]:
    """psi on the boundary points, with increasing slopes along each edge."""
    h: dict[tuple[int, int], Fraction] = {}
    cur = Fraction(0)
    k = 0
    for sign, ms in walk.steps:
        for slope in sorted(sign * Fraction(V[i]) for i in ms):
            h[walk.points[k]] = cur
            cur += slope
            k += 1
    if cur != 0:
        raise PreconditionError(f"consistency equation of 2-face {walk.s} of P° fails")
    return h


@dataclass
class FaceCertificate:
    s: int
    cells: list[list[tuple[int, int]]]
    bad_cells: list[list[tuple[int, int]]]


def verify_regular_slope(P: ReflexivePolytope, D: StandardDecomposition, V: Sequence,
                         orient: OrientationData | None = None) -> tuple[bool, list[FaceCertificate]]:
    """Check that every empty cell of every boundary subdivision is a standard triangle."""
    orient = orient or build_orientation(P)
    check_slope_function(P, D, V, orient)
    certs = []
    for walk in face_walks(P, D, orient):
        hull = lower_hull_subdivision(P.dual.scaled_faces[walk.s].polygon, boundary_heights(walk, V))
        bad = [c for c in hull.cells if hull.is_empty(c) and not hull.is_unimodular_triangle(c)]
        certs.append(FaceCertificate(walk.s, hull.cells, bad))
    return all(not c.bad_cells for c in certs), certs


def check_slope_function(P: ReflexivePolytope, D: StandardDecomposition, V: Sequence,
                         orient: OrientationData | None = None) -> None:
    if len(V) != D.n_summands:
        raise PreconditionError(f"expected {D.n_summands} slope values, got {len(V)}")
    for k, part in enumerate(D.parts):
        vals = [V[D.summand_index[(k, j)]] for j in range(len(part))]
        if len(set(vals)) != len(vals):
            raise PreconditionError(f"slope values on 2-face {k} of P are not pairwise distinct")
    for r in consistency_rows(P, D, orient or build_orientation(P)):
        if sum(c * Fraction(V[i]) for i, c in r.items()) != 0:
            raise PreconditionError(f"consistency equation {sorted(r)} fails")


def classify_hollow(Q: Sequence[Sequence[int]]) -> str:
    """'not-hollow', 'cayley-of-segments' or 'twice-standard-simplex'."""
    from .lattice import convex_hull_2d

    poly = convex_hull_2d(Q)
    _, inner = polygon_lattice_points(poly)
    if inner:
        return "not-hollow"
    if affine_equivalent(poly, [(0, 0), (2, 0), (0, 2)]) is not None:
        return "twice-standard-simplex"
    # remaining hollow polygons have lattice width one
    for i in range(len(poly)):
        d = sub(poly[(i + 1) % len(poly)], poly[i])
        g = content(d)
        n = (-d[1] // g, d[0] // g)
        vals = [n[0] * p[0] + n[1] * p[1] for p in poly]
        if max(vals) - min(vals) == 1:
            return "cayley-of-segments"
    raise RuntimeError(f"hollow polygon of unexpected shape: {poly}")


def unit_parallelograms(points: Sequence[tuple[int, int]]) -> list[tuple]:
    """Empty unit parallelograms (a, b, c, d), in cyclic order, among ``points``."""
    out = []
    for quad in itertools.combinations(points, 4):
        for a, b, c, d in ((quad[0], quad[1], quad[2], quad[3]),
                           (quad[0], quad[1], quad[3], quad[2]),
                           (quad[0], quad[2], quad[1], quad[3])):
            # a, c and b, d are the diagonals
            if (a[0] + c[0], a[1] + c[1]) == (b[0] + d[0], b[1] + d[1]):
                if abs(cross2(sub(b, a), sub(d, a))) == 1:
                    out.append((a, b, c, d))
    return out


# ---------------------------------------------------------------------------
# the decision
# ---------------------------------------------------------------------------

@dataclass
class RegularityVerdict:
    status: str  # "regular", "irregular" or "not-sd"
    witness: list[Fraction] | None = None
    obstruction: str | None = None
    obstruction_form: dict[int, int] | None = None
    space_dim: int = 0


def _psi_forms(walk: FaceWalk, orders: Sequence[Sequence[int]]) -> dict[tuple[int, int], dict[int, int]]:
    """psi at each boundary point as a linear form in V, for fixed edge orders."""
    out = {}
    cur: dict[int, int] = {}
    k = 0
    for (sign, _), order in zip(walk.steps, orders):
        for i in order:
            out[walk.points[k]] = dict(cur)
            cur[i] = cur.get(i, 0) + sign
            k += 1
    return out


@dataclass
class _SquareFace:
    walk: FaceWalk
    patterns: list[tuple]  # good patterns: tuples of per-edge orders


def _square_faces(P, D, orient, em, space: ConsistencySpace):
    """Faces where some ordering of boundary slopes forces an empty square."""
    found = []
    for walk in face_walks(P, D, orient, em):
        poly = P.dual.scaled_faces[walk.s].polygon
        _, inner = polygon_lattice_points(poly)
        if inner:
            continue
        squares = unit_parallelograms(walk.points)
        if not squares:
            continue
        good = []
        any_bad = False
        for orders in itertools.product(*(itertools.permutations(ms) for _, ms in walk.steps)):
            psi = _psi_forms(walk, orders)
            bad = False
            for a, b, c, d in squares:
                form: dict[int, int] = {}
                for p, w in ((a, 1), (c, 1), (b, -1), (d, -1)):
                    for i, x in psi[p].items():
                        form[i] = form.get(i, 0) + w * x
                if not any(space.restrict(form)):
                    bad = True
                    break
            if bad:
                any_bad = True
            else:
                good.append(orders)
        if any_bad:
            found.append(_SquareFace(walk, good))
    return found


def _order_forms(walk: FaceWalk, orders, space: ConsistencySpace) -> list[list[Fraction]]:
    """Forms that are positive exactly when the edge slopes follow ``orders``."""
    forms = []
    for (sign, _), order in zip(walk.steps, orders):
        for i, j in zip(order, order[1:]):
            forms.append(space.restrict({j: sign, i: -sign}))
    return forms


def decide_regularity(P: ReflexivePolytope, D: StandardDecomposition,
                      orient: OrientationData | None = None, seed: int = 0) -> RegularityVerdict:
    """Exact decision whether (P, D) admits a consistent, strictly convex, regular slope function."""
    if D.P is not P:
        for sf, part in zip(P.scaled_faces, D.parts):
            if Counter(v for m in part for v in m.edge_vectors) != edge_profile(sf.polygon):
                raise InvalidInputError("D is not a decomposition of the scaled 2-faces of P")
    orient = orient or build_orientation(P)
    em = edge_matching(P, D)
    rows = consistency_rows(P, D, orient, em)
    space = ConsistencySpace(D.n_summands, kernel(rows, D.n_summands), rows)

    # strict convexity: V(m) = V(m') must not hold on the whole space
    sig = [tuple(b[i] for b in space.basis) for i in range(D.n_summands)]
    for k, part in enumerate(D.parts):
        for j1, j2 in itertools.combinations(range(len(part)), 2):
            i1, i2 = D.summand_index[(k, j1)], D.summand_index[(k, j2)]
            if sig[i1] == sig[i2]:
                return RegularityVerdict(
                    "irregular",
                    obstruction=f"slopes of summands {j1} and {j2} on 2-face {k} of P are forced equal",
                    obstruction_form={i1: 1, i2: -1},
                    space_dim=space.dim,
                )

    # faces of P° where an empty lattice square can be forced
    sq = _square_faces(P, D, orient, em, space)
    sq.sort(key=lambda f: len(f.patterns))
    for f in sq:
        if not f.patterns:
            return RegularityVerdict(
                "irregular",
                obstruction=f"every slope ordering on 2-face {f.walk.s} of P° yields an empty lattice square",
                space_dim=space.dim,
            )

    def search(i: int, forms: list) -> list[Fraction] | None:
        pt = feasible_point(forms, space.dim)
        if pt is None:
            return None
        if i == len(sq):
            return pt
        for orders in sq[i].patterns:
            res = search(i + 1, forms + _order_forms(sq[i].walk, orders, space))
            if res is not None:
                return res
        return None

    c0 = search(0, [])
    if c0 is None:
        faces = ", ".join(str(f.walk.s) for f in sq)
        return RegularityVerdict(
            "irregular",
            obstruction=f"no slope ordering avoids empty lattice squares on 2-faces {faces} of P°",
            space_dim=space.dim,
        )
    V = _witness(P, D, orient, space, c0, seed)
    if V is None:
        raise RuntimeError("no witness found in a feasible region")  # pragma: no cover
    return RegularityVerdict("regular", witness=V, space_dim=space.dim)


def _witness(P, D, orient, space: ConsistencySpace, c0, seed: int) -> list[Fraction] | None:
    """Perturb a point of the feasible cone until it passes the independent check.

    The perturbation is wide enough to miss every non-forced hyperplane with
    high probability, and ``c0`` is scaled to dominate it so the slope
    orderings stay in the chosen region.
    """
    rng = random.Random(seed)
    spread = 10 ** 6
    for scale in (spread, 10 * spread, 10 ** 3 * spread, 10 ** 6 * spread):
        for _ in range(4):
            c = [scale * x + rng.randint(-spread, spread) for x in c0]
            V = space.point(c)
            try:
                ok, _ = verify_regular_slope(P, D, V, orient)
            except PreconditionError:
                continue
            if ok:
                return V
    return None


def monodromy_matrix(P: ReflexivePolytope, F1: int, F2: int, v1: int, v2: int) -> tuple[tuple[int, ...], ...]:
    """T(m) = m + <n2 - n1, m> (v1 - v2) for facets F1, F2 and vertices v1, v2 of P°.

    ``n_i`` is the vertex of P dual to ``F_i``.
    """
    Q = P.dual
    n1, n2 = (P.vertices[next(iter(Q.dual_face(Q.facets3[f])))] for f in (F1, F2))
    u = sub(Q.vertices[v1], Q.vertices[v2])
    w = sub(n2, n1)
    d = len(u)
    return tuple(tuple(int(i == j) + u[i] * w[j] for j in range(d)) for i in range(d))
