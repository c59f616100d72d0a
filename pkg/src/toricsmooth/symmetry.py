"""
Lattice automorphisms of reflexive polytopes and their action on decomposition data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .lattice import InvalidInputError, det, mat_mul, mat_vec, rank, rational_inverse
from .minkowski import StandardDecomposition, face_options
from .polytope import ReflexivePolytope

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LatticeAutomorphism:
    matrix: Matrix

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        return mat_vec(self.matrix, v)

    def __matmul__(self, other: "LatticeAutomorphism") -> "LatticeAutomorphism":
        return LatticeAutomorphism(tuple(tuple(r) for r in mat_mul(self.matrix, other.matrix)))


def _neighbours(P: ReflexivePolytope) -> list[list[int]]:
    nb: list[list[int]] = [[] for _ in P.vertices]
    for e in P.edges:
        a, b = sorted(e)
        nb[a].append(b)
        nb[b].append(a)
    return nb


def _anchor(P: ReflexivePolytope, nb) -> tuple[int, list[int], bool]:
    """A vertex, some neighbours, and whether the vertex itself is in the frame.

    The chosen vectors form a basis of the ambient space.
    """
    d = P.poly.ambient_dim
    for v in range(len(P.vertices)):
        for ns in itertools.combinations(nb[v], d - 1):
            if rank([P.vertices[v]] + [P.vertices[n] for n in ns], d) == d:
                return v, list(ns), True
    for v in range(len(P.vertices)):
        for ns in itertools.combinations(nb[v], d):
            if rank([P.vertices[n] for n in ns], d) == d:
                return v, list(ns), False
    raise InvalidInputError("no vertex frame found")  # pragma: no cover


def automorphism_group(P: ReflexivePolytope) -> list[LatticeAutomorphism]:
    """All integral linear maps permuting the vertices of P, sorted."""
    nb = _neighbours(P)
    v0, ns, with_v0 = _anchor(P, nb)
    d = P.poly.ambient_dim
    frame = ([v0] if with_v0 else []) + ns
    m_inv = rational_inverse([[P.vertices[i][r] for i in frame] for r in range(d)])
    verts = set(P.vertices)
    out = set()
    for w0 in range(len(P.vertices)):
        if len(nb[w0]) != len(nb[v0]):
            continue
        for img in itertools.permutations(nb[w0], len(ns)):
            frame2 = ([w0] if with_v0 else []) + list(img)
            m2 = [[P.vertices[i][r] for i in frame2] for r in range(d)]
            g = mat_mul(m2, m_inv)
            if any(x.denominator != 1 for row in g for x in row):
                continue
            g = tuple(tuple(int(x) for x in row) for row in g)
            if abs(det(g)) != 1:
                continue
            if {mat_vec(g, v) for v in P.vertices} == verts:
                out.add(g)
    return [LatticeAutomorphism(g) for g in sorted(out)]


@dataclass
class FaceAction:
    """How an automorphism moves 2-faces of P and their tangent planes."""

    perm: list[int]  # face k -> face perm[k]
    planar: list[tuple[tuple[int, int], tuple[int, int]]]  # 2x2 map face k -> face perm[k]


def face_action(P: ReflexivePolytope, g: LatticeAutomorphism, target: ReflexivePolytope | None = None) -> FaceAction:
    """Face permutation and planar maps induced by g, from P to ``target`` (default P)."""
    Q = target if target is not None else P
    vidx = {v: i for i, v in enumerate(Q.vertices)}
    try:
        vperm = [vidx[g(v)] for v in P.vertices]
    except KeyError:
        raise InvalidInputError("matrix does not map the vertices of P onto the target") from None
    perm, planar = [], []
    for k, f in enumerate(P.faces2):
        k2 = Q.index(frozenset(vperm[i] for i in f))
        src, dst = P.scaled_faces[k], Q.scaled_faces[k2]
        cols = [dst.to_plane(g(b)) for b in src.basis]
        perm.append(k2)
        planar.append(((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1])))
    return FaceAction(perm, planar)


def act(P: ReflexivePolytope, g: LatticeAutomorphism, D: StandardDecomposition) -> StandardDecomposition:
    """Push D forward along an automorphism g; each part comes out in sorted order."""
    return transport(P, P, g, D)


def transport(P: ReflexivePolytope, Q: ReflexivePolytope, g: LatticeAutomorphism,
              D: StandardDecomposition) -> StandardDecomposition:
    """Carry D on P to the image polytope Q = g(P)."""
    fa = face_action(P, g, Q)
    parts: list = [None] * len(D.parts)
    for k, part in enumerate(D.parts):
        parts[fa.perm[k]] = tuple(sorted(m.transformed(fa.planar[k]) for m in part))
    return StandardDecomposition(Q, parts)


@dataclass
class OrbitPartition:
    """Orbits of the automorphism group on the decompositions of P.

    ``representatives[i]`` is the least element (by per-face option index) of
    orbit i; ``class_labels[i]`` is its configuration label when a labelling
    function was supplied.
    """

    representatives: list[StandardDecomposition]
    orbit_sizes: list[int]
    class_labels: list[Hashable] = field(default_factory=list)
    group_order: int = 0
    members: list[list[int]] = field(default_factory=list)  # indices into the enumeration order

    def __len__(self):
        return len(self.representatives)

    def class_counts(self) -> dict[Hashable, int]:
        out: dict[Hashable, int] = {}
        for lab in self.class_labels:
            out[lab] = out.get(lab, 0) + 1
        return out


class DecompositionSpace:
    """All standard decompositions of P, encoded by per-face option indices."""

    def __init__(self, P: ReflexivePolytope):
        self.P = P
        self.options = face_options(P)
        self.variable = [k for k, o in enumerate(self.options) if len(o) > 1]
        self._lookup = [{opt: i for i, opt in enumerate(o)} for o in self.options]

    @cached_property
    def codes(self) -> np.ndarray:
        """Every decomposition as a row of option indices, in enumeration order."""
        ranges = [range(len(o)) for o in self.options]
        return np.array(list(itertools.product(*ranges)), dtype=np.int8).reshape(-1, len(self.options))

    def __len__(self):
        return len(self.codes)

    def decomposition(self, code: Sequence[int]) -> StandardDecomposition:
        return StandardDecomposition(self.P, [self.options[k][int(i)] for k, i in enumerate(code)], check=False)

    def code_of(self, D: StandardDecomposition) -> tuple[int, ...]:
        return tuple(self._lookup[k][tuple(sorted(p))] for k, p in enumerate(D.parts))

    def option_map(self, g: LatticeAutomorphism) -> tuple[list[int], list[list[int]]]:
        fa = face_action(self.P, g)
        maps = []
        for k, opts in enumerate(self.options):
            dst = self._lookup[fa.perm[k]]
            maps.append([dst[tuple(sorted(m.transformed(fa.planar[k]) for m in o))] for o in opts])
        return fa.perm, maps


def orbits(P: ReflexivePolytope, all_D: Iterable[StandardDecomposition] | None = None,
           label: Callable[[StandardDecomposition], Hashable] | None = None,
           group: list[LatticeAutomorphism] | None = None) -> OrbitPartition:
    """Partition decompositions into orbits under Aut(P).

    ``all_D`` defaults to the full enumeration; when given it must be closed
    under the group.
    """
    space = DecompositionSpace(P)
    if all_D is None:
        codes = space.codes
    else:
        codes = np.array([space.code_of(D) for D in all_D], dtype=np.int8).reshape(-1, len(space.options))
    group = group if group is not None else automorphism_group(P)
    var = space.variable
    radix = [len(space.options[k]) for k in var]
    pos = {k: i for i, k in enumerate(var)}
    weights = np.array([int(np.prod(radix[i + 1:], dtype=object)) for i in range(len(var))], dtype=object)
    small = int(np.prod(radix, dtype=object)) < 2 ** 62
    dtype = np.int64 if small else object
    weights = weights.astype(dtype)

    def encode(arr):
        return (arr.astype(dtype) * weights).sum(axis=1) if var else np.zeros(len(arr), dtype=dtype)

    sub = codes[:, var].astype(np.int64) if var else np.zeros((len(codes), 0), dtype=np.int64)
    best = encode(sub)
    own = best.copy()
    for g in group:
        perm, maps = space.option_map(g)
        img = np.empty_like(sub)
        for k in var:
            lut = np.array(maps[k], dtype=np.int64)
            img[:, pos[perm[k]]] = lut[sub[:, pos[k]]]
        best = np.minimum(best, encode(img))
    reps: dict = {}
    for i, b in enumerate(best.tolist()):
        reps.setdefault(b, []).append(i)
    keys = sorted(reps)
    own_list = own.tolist()
    representatives, sizes, members = [], [], []
    for b in keys:
        idx = reps[b]
        r = next(i for i in idx if own_list[i] == b)
        representatives.append(space.decomposition(codes[r]))
        sizes.append(len(idx))
        members.append(idx)
    labels = [label(D) for D in representatives] if label else []
    return OrbitPartition(representatives, sizes, labels, len(group), members)
