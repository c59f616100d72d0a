"""
Minkowski decompositions of scaled 2-faces into standard simplices.

Summands are recorded translation-free, by their edge vectors: a segment
is ``{d, -d}`` and a triangle is the three counter-clockwise edge vectors
``{a, b, c}`` with ``a + b + c = 0``.  All vectors are planar, written in
the basis of the owning ``ScaledFace``.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .lattice import InvalidInputError, cross2, primitive, sub
from .polytope import ReflexivePolytope, ScaledFace

log = logging.getLogger(__name__)

Vec2 = tuple[int, int]


@dataclass(frozen=True, order=True)
class SummandProfile:
    kind: str  # "segment" or "triangle"
    edge_vectors: tuple[Vec2, ...]

    def __post_init__(self):
        vs = self.edge_vectors
        if any(primitive(v) != tuple(v) for v in vs):
            raise InvalidInputError(f"non-primitive summand vector in {vs}")
        if tuple(map(sum, zip(*vs))) != (0, 0):
            raise InvalidInputError(f"summand vectors do not close up: {vs}")
        if self.kind == "segment":
            if len(vs) != 2:
                raise InvalidInputError("a segment has two edge vectors")
        elif self.kind == "triangle":
            if len(vs) != 3 or abs(cross2(vs[0], vs[1])) != 1:
                raise InvalidInputError(f"not a standard triangle: {vs}")
        else:
            raise InvalidInputError(f"unknown summand kind {self.kind!r}")

    @classmethod
    def segment(cls, d: Vec2) -> "SummandProfile":
        d = tuple(d)
        return cls("segment", tuple(sorted([d, (-d[0], -d[1])])))

    @classmethod
    def triangle(cls, a: Vec2, b: Vec2, c: Vec2) -> "SummandProfile":
        # a zero-sum triple is the ccw edge set of exactly one triangle
        return cls("triangle", tuple(sorted([tuple(a), tuple(b), tuple(c)])))

    @property
    def dim(self) -> int:
        return 1 if self.kind == "segment" else 2

    def transformed(self, a: Sequence[Sequence[int]]) -> "SummandProfile":
        """Image under a planar unimodular map, re-oriented counter-clockwise."""
        img = [(a[0][0] * x + a[0][1] * y, a[1][0] * x + a[1][1] * y) for x, y in self.edge_vectors]
        if self.kind == "segment":
            return SummandProfile.segment(img[0])
        # the image of a ccw triangle is ccw exactly when det > 0
        if a[0][0] * a[1][1] - a[0][1] * a[1][0] < 0:
            img = [(-x, -y) for x, y in img]
        return SummandProfile("triangle", tuple(sorted(img)))


Decomposition = tuple[SummandProfile, ...]


def edge_profile(polygon: Sequence[Vec2]) -> Counter:
    """Primitive ccw edge directions of a polygon, with lattice-length multiplicity."""
    out: Counter = Counter()
    n = len(polygon)
    for i in range(n):
        d = sub(polygon[(i + 1) % n], polygon[i])
        p = primitive(d)
        out[p] += max(abs(x) for x in d) // max(abs(x) for x in p)
    return out


def enumerate_summand_decompositions(polygon: Sequence[Vec2]) -> list[Decomposition]:
    """All ways to split the edge vectors of a ccw polygon into standard summands.

    Each decomposition is a sorted tuple of profiles; the list is sorted too.
    """
    budget = edge_profile(polygon)
    dirs = sorted(budget)
    present = set(dirs)
    # triangles containing each direction, from zero-sum unimodular triples
    tri_with: dict[Vec2, list[SummandProfile]] = {d: [] for d in dirs}
    for a, b in itertools.combinations(dirs, 2):
        c = (-a[0] - b[0], -a[1] - b[1])
        if c in present and c > b and abs(cross2(a, b)) == 1:
            t = SummandProfile.triangle(a, b, c)
            for d in (a, b, c):
                tri_with[d].append(t)

    found: set[Decomposition] = set()

    def rec(left: Counter, acc: list[SummandProfile]):
        rest = [d for d in dirs if left[d] > 0]
        if not rest:
            found.add(tuple(sorted(acc)))
            return
        d = rest[0]
        nd = (-d[0], -d[1])
        if left[nd] > 0:
            left[d] -= 1
            left[nd] -= 1
            acc.append(SummandProfile.segment(d))
            rec(left, acc)
            acc.pop()
            left[d] += 1
            left[nd] += 1
        for t in tri_with[d]:
            if all(left[v] > 0 for v in t.edge_vectors):
                for v in t.edge_vectors:
                    left[v] -= 1
                acc.append(t)
                rec(left, acc)
                acc.pop()
                for v in t.edge_vectors:
                    left[v] += 1

    rec(Counter(budget), [])
    return sorted(found)


def face_options(P: ReflexivePolytope) -> list[list[Decomposition]]:
    """Decompositions of every scaled 2-face of P, in face order."""
    return [enumerate_summand_decompositions(sf.polygon) for sf in P.scaled_faces]


def is_simply_decomposable(P: ReflexivePolytope) -> bool:
    if not isinstance(P, ReflexivePolytope):
        raise InvalidInputError("simple decomposability needs a reflexive polytope")
    return all(face_options(P))


class StandardDecomposition:
    """A choice of decomposition for every 2-face of P.

    ``parts[k]`` is the multiset chosen for ``P.faces2[k]``; its tuple order is
    the fixed total order on that multiset.
    """

    def __init__(self, P: ReflexivePolytope, parts: Sequence[Sequence[SummandProfile]], check: bool = True):
        self.P = P
        self.parts: tuple[Decomposition, ...] = tuple(tuple(p) for p in parts)
        if len(self.parts) != len(P.faces2):
            raise InvalidInputError("one summand multiset is needed per 2-face")
        if check:
            for k, (sf, part) in enumerate(zip(P.scaled_faces, self.parts)):
                got = Counter(v for m in part for v in m.edge_vectors)
                if got != edge_profile(sf.polygon):
                    raise InvalidInputError(f"summands of 2-face {k} do not decompose its scaled polygon")

    def __eq__(self, other):
        return isinstance(other, StandardDecomposition) and self.P is other.P and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"StandardDecomposition({self.P.name}, {self.n_triangles} triangles, {self.n_summands} summands)"

    @cached_property
    def key(self) -> tuple:
        """Order-independent identity of D (each part as a sorted multiset)."""
        return tuple(tuple(sorted(p)) for p in self.parts)

    @cached_property
    def summands(self) -> list[tuple[int, int]]:
        """Global summand list as (face index, position) pairs."""
        return [(k, j) for k, p in enumerate(self.parts) for j in range(len(p))]

    @cached_property
    def summand_index(self) -> dict[tuple[int, int], int]:
        return {s: i for i, s in enumerate(self.summands)}

    @property
    def n_summands(self) -> int:
        return len(self.summands)

    @property
    def n_triangles(self) -> int:
        return sum(m.kind == "triangle" for p in self.parts for m in p)

    def reordered(self, perms: dict[int, Sequence[int]]) -> "StandardDecomposition":
        """Same multisets with a different fixed order on some faces."""
        parts = [tuple(p[i] for i in perms[k]) if k in perms else p for k, p in enumerate(self.parts)]
        return StandardDecomposition(self.P, parts, check=False)


def enumerate_decomposition_data(P: ReflexivePolytope) -> Iterator[StandardDecomposition]:
    """Lazily iterate over every standard decomposition of P.

    If some scaled 2-face has no decomposition the iterator is empty and a
    warning names the face.
    """
    opts = face_options(P)
    for k, o in enumerate(opts):
        if not o:
            log.warning("2-face %d (%s) of %s is not decomposable", k, P.points_of(P.faces2[k]), P.name)
            return iter(())
    return (StandardDecomposition(P, parts, check=False) for parts in itertools.product(*opts))


def count_decompositions(P: ReflexivePolytope) -> int:
    n = 1
    for o in face_options(P):
        n *= len(o)
    return n


@dataclass
class EdgeMatching:
    """Edges(rho, m) and S(sigma, tau) for a pair (P, D).

    ``edges[(k, j)]`` lists edge indices of P matched with summand j of
    2-face k.  ``S[(s, t)]`` lists positions in ``D(tau*)`` for the 2-face
    ``s`` of P° and its edge ``t`` (indices into ``P.dual.faces2`` and
    ``P.dual.edges``).
    """

    edges: dict[tuple[int, int], list[int]]
    S: dict[tuple[int, int], list[int]]


@lru_cache(maxsize=None)
def face_edge_directions(P: ReflexivePolytope, k: int) -> dict[int, Vec2]:
    """Primitive ccw direction (planar) of each edge of 2-face k (shared, do not mutate)."""
    sf: ScaledFace = P.scaled_faces[k]
    out = {}
    for a, b in sf.cycle_edges:
        e = P.index(frozenset((a, b)))
        out[e] = primitive(sf.to_plane(sub(P.vertices[b], P.vertices[a])))
    return out


def edge_matching(P: ReflexivePolytope, D: StandardDecomposition) -> EdgeMatching:
    edges: dict[tuple[int, int], list[int]] = {}
    for k, part in enumerate(D.parts):
        dirs = face_edge_directions(P, k)
        for j, m in enumerate(part):
            edges[(k, j)] = sorted(e for e, d in dirs.items() if d in m.edge_vectors)
    Q = P.dual
    S: dict[tuple[int, int], list[int]] = {}
    for s, sigma in enumerate(Q.faces2):
        sigma_star = Q.face2_dual[s]  # edge of P
        for t in Q.edges_of(sigma):
            rho = Q.edge_dual[t]  # 2-face of P
            S[(s, t)] = [j for j in range(len(D.parts[rho])) if sigma_star in edges[(rho, j)]]
    return EdgeMatching(edges, S)
