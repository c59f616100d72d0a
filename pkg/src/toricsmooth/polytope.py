"""
Lattice polytopes, face lattices, polar duality and scaled 2-faces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .lattice import (
    InvalidInputError,
    Vec,
    affine_dimension,
    convex_hull_2d,
    cross2,
    dot,
    express,
    facets,
    lattice_frame,
    lattice_length,
    normalized_volume,
    unexpress,
)

Face = frozenset  # of vertex indices


class NotConvexPositionError(InvalidInputError):
    """A listed point is not a vertex of the convex hull."""


class LatticePolytope:
    """A full-dimensional lattice polytope given by its vertices.

    Vertices are stored sorted lexicographically so that face indices are
    reproducible between runs.
    """

    def __init__(self, vertices: Sequence[Sequence[int]], name: str = ""):
        pts = sorted(set(tuple(int(x) for x in v) for v in vertices))
        if not pts:
            raise InvalidInputError("empty vertex list")
        self.name = name
        self.ambient_dim = len(pts[0])
        if any(len(p) != self.ambient_dim for p in pts):
            raise InvalidInputError("inconsistent vertex dimensions")
        self.dim = affine_dimension(pts)
        if self.dim != self.ambient_dim:
            raise InvalidInputError(f"polytope is not full-dimensional ({self.dim} < {self.ambient_dim})")
        if self.dim == 2:
            hull = convex_hull_2d(pts)
            if len(hull) != len(pts):
                extra = sorted(set(pts) - set(hull))
                raise NotConvexPositionError(f"not in convex position: {extra}")
        self.vertices: tuple[Vec, ...] = tuple(pts)
        if self.dim > 2:
            lat = self.face_lattice
            if len(lat.faces[0]) != len(pts):
                verts = {next(iter(f)) for f in lat.faces[0]}
                extra = [pts[i] for i in range(len(pts)) if i not in verts]
                raise NotConvexPositionError(f"not in convex position: {extra}")

    def __repr__(self):
        return f"LatticePolytope({self.name or '?'}, {len(self.vertices)} vertices, dim {self.dim})"

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @cached_property
    def facets(self) -> list[tuple[Vec, int, Face]]:
        return facets(self.vertices)

    @cached_property
    def face_lattice(self) -> "FaceLattice":
        return face_lattice(self)

    def points_of(self, face: Face) -> list[Vec]:
        return [self.vertices[i] for i in sorted(face)]

    @cached_property
    def origin_interior(self) -> bool:
        return all(c < 0 for _, c, _ in self.facets)

    @cached_property
    def polygon(self) -> list[Vec]:
        """Counter-clockwise vertex cycle (2-dimensional polytopes only)."""
        if self.dim != 2:
            raise InvalidInputError("not a polygon")
        return convex_hull_2d(self.vertices)


@dataclass
class FaceLattice:
    """Graded face poset; ``faces[k]`` lists k-faces as vertex-index sets."""

    faces: dict[int, list[Face]]
    incidence: dict[int, dict[Face, list[Face]]]  # k -> (k-face -> containing (k+1)-faces)

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces[k]) for k in sorted(self.faces))


def face_lattice(p: LatticePolytope) -> FaceLattice:
    """All proper faces, as intersections of facet vertex sets."""
    d = p.dim
    if d != p.ambient_dim:
        raise InvalidInputError("face lattice requires a full-dimensional polytope")
    fsets = [f[2] for f in p.facets]
    seen = set(fsets)
    stack = list(fsets)
    while stack:
        f = stack.pop()
        for g in fsets:
            h = f & g
            if h and h not in seen:
                seen.add(h)
                stack.append(h)
    faces: dict[int, list[Face]] = {k: [] for k in range(d)}
    for f in seen:
        k = affine_dimension([p.vertices[i] for i in f])
        faces[k].append(f)
    for k in faces:
        faces[k].sort(key=lambda f: sorted(f))
    incidence: dict[int, dict[Face, list[Face]]] = {}
    for k in range(d - 1):
        incidence[k] = {f: [g for g in faces[k + 1] if f < g] for f in faces[k]}
    return FaceLattice(faces, incidence)


@dataclass
class PolarDual:
    vertices: list[tuple[Fraction, ...]]
    reflexive: bool
    polytope: LatticePolytope | None


def polar_dual(p: LatticePolytope) -> PolarDual:
    """``{m : <m, n> >= -1 for all n in P}``."""
    if not p.origin_interior:
        raise InvalidInputError("origin is not in the interior")
    verts = sorted(tuple(Fraction(x, -c) for x in n) for n, c, _ in p.facets)
    reflexive = all(x.denominator == 1 for v in verts for x in v)
    poly = LatticePolytope([tuple(int(x) for x in v) for v in verts], name=f"{p.name}°" if p.name else "") if reflexive else None
    return PolarDual(verts, reflexive, poly)


def product(p1: LatticePolytope, p2: LatticePolytope, name: str = "") -> LatticePolytope:
    verts = [v + w for v in p1.vertices for w in p2.vertices]
    return LatticePolytope(verts, name=name or f"{p1.name}x{p2.name}")


@dataclass(frozen=True)
class ScaledFace:
    """``scale * F`` in lattice coordinates of the tangent lattice of ``F``.

    ``polygon`` is counter-clockwise in the chosen basis; that orientation is
    the face's orientation everywhere downstream.
    """

    source: Face
    scale: int
    anchor: Vec
    basis: tuple[Vec, Vec]
    polygon: tuple[tuple[int, int], ...]
    cycle: tuple[int, ...]  # vertex indices of F, in the same order as ``polygon``

    @property
    def cycle_edges(self) -> list[tuple[int, int]]:
        """Consecutive vertex pairs of the counter-clockwise boundary."""
        n = len(self.cycle)
        return [(self.cycle[i], self.cycle[(i + 1) % n]) for i in range(n)]

    def to_ambient(self, v: Sequence[int]) -> Vec:
        """Linear (not affine) image of a planar vector."""
        return tuple(v[0] * a + v[1] * b for a, b in zip(*self.basis))

    def to_plane(self, v: Sequence[int]) -> tuple[int, int]:
        return express(v, (0,) * len(v), list(self.basis))

    def embed(self, x: Sequence[int]) -> Vec:
        """Ambient point of ``scale * F`` for planar coordinates ``x``."""
        return unexpress(x, tuple(self.scale * a for a in self.anchor), list(self.basis))

    def orientation(self, u: Sequence[int], w: Sequence[int]) -> int:
        """Sign of det(u, w) for ambient vectors tangent to the face."""
        c = cross2(self.to_plane(u), self.to_plane(w))
        return (c > 0) - (c < 0)


class ReflexivePolytope:
    """A 4-dimensional reflexive polytope together with its polar.

    Index conventions: ``self.edges``, ``self.faces2`` and ``self.facets3``
    are the sorted face lists of P; the same lists of P° live on
    ``self.dual``.
    """

    def __init__(self, poly: LatticePolytope | Sequence[Sequence[int]], name: str = "", _dual=None):
        if not isinstance(poly, LatticePolytope):
            poly = LatticePolytope(poly, name=name)
        self.poly = poly
        self.name = name or poly.name
        if poly.dim != 4:
            raise InvalidInputError("ReflexivePolytope expects a 4-dimensional polytope")
        if _dual is None:
            pd = polar_dual(poly)
            if not pd.reflexive:
                raise InvalidInputError(f"{self.name or 'polytope'} is not reflexive")
            _dual = ReflexivePolytope(pd.polytope, name=f"{self.name}°", _dual=self)
        self.dual: ReflexivePolytope = _dual
        lat = poly.face_lattice
        self.lattice = lat
        self.vertices = poly.vertices
        self.edges: list[Face] = lat.faces[1]
        self.faces2: list[Face] = lat.faces[2]
        self.facets3: list[Face] = lat.faces[3]
        self._index = {f: i for k in range(4) for i, f in enumerate(lat.faces[k])}

    def __repr__(self):
        return f"ReflexivePolytope({self.name}, f={self.lattice.f_vector()})"

    def index(self, face: Face) -> int:
        return self._index[face]

    def dual_face(self, face: Face) -> Face:
        """F* as vertex indices of P°: ``{m in P° : <m, n> = -1 for n in F}``."""
        if face not in self._index:
            raise InvalidInputError("not a proper face of P")
        pts = [self.vertices[i] for i in face]
        return frozenset(
            j for j, m in enumerate(self.dual.vertices) if all(dot(m, n) == -1 for n in pts)
        )

    @cached_property
    def edge_dual(self) -> list[int]:
        """Index in ``dual.faces2`` of E* for each edge E of P."""
        return [self.dual.index(self.dual_face(e)) for e in self.edges]

    @cached_property
    def face2_dual(self) -> list[int]:
        """Index in ``dual.edges`` of F* for each 2-face F of P."""
        return [self.dual.index(self.dual_face(f)) for f in self.faces2]

    def edge_length(self, i: int) -> int:
        a, b = sorted(self.edges[i])
        return lattice_length(self.vertices[a], self.vertices[b])

    def edge_points(self, i: int) -> tuple[Vec, Vec]:
        a, b = sorted(self.edges[i])
        return self.vertices[a], self.vertices[b]

    @cached_property
    def scaled_faces(self) -> list[ScaledFace]:
        return [self.scaled_face(f) for f in self.faces2]

    def scaled_face(self, face: Face) -> ScaledFace:
        """``ℓ(F*) F`` in a Hermite basis anchored at F's least vertex."""
        pts = [self.vertices[i] for i in sorted(face)]
        if affine_dimension(pts) != 2:
            raise InvalidInputError("not a 2-face")
        e = self.dual.points_of(self.dual_face(face))
        scale = lattice_length(*e)
        anchor, basis = lattice_frame(pts)
        idx = sorted(face)
        local = {tuple(scale * c for c in express(p, anchor, basis)): i for p, i in zip(pts, idx)}
        hull = tuple(convex_hull_2d(local))
        return ScaledFace(face, scale, anchor, (basis[0], basis[1]), hull, tuple(local[q] for q in hull))

    def points_of(self, face: Face) -> list[Vec]:
        return [self.vertices[i] for i in sorted(face)]

    def volume(self) -> int:
        return normalized_volume(self.vertices, 4)

    def face_volume(self, face: Face) -> int:
        pts = self.points_of(face)
        return normalized_volume(pts, affine_dimension(pts))

    def edges_of(self, face: Face) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e <= face]

    def faces2_containing(self, edge: Face) -> list[int]:
        return [i for i, f in enumerate(self.faces2) if edge <= f]

    def facets_containing(self, face: Face) -> list[int]:
        return [i for i, f in enumerate(self.facets3) if face <= f]

    def facet_pairs(self):
        """Pairs of facets of P meeting in a 2-face, with that 2-face's index."""
        out = []
        for k, f in enumerate(self.faces2):
            a, b = self.facets_containing(f)
            out.append((a, b, k))
        return out

    def transform(self, g: Sequence[Sequence[int]], name: str = "") -> "ReflexivePolytope":
        from .lattice import mat_vec
        return ReflexivePolytope([mat_vec(g, v) for v in self.vertices], name=name or f"g·{self.name}")


def reflexive_product(p1: LatticePolytope, p2: LatticePolytope, name: str = "") -> ReflexivePolytope:
    return ReflexivePolytope(product(p1, p2, name=name))
