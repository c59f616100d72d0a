"""
Topological invariants of the smoothing: Euler characteristic and b2.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .lattice import integer_rank, kernel, primitive, sub
from .minkowski import StandardDecomposition, edge_matching, is_simply_decomposable
from .polytope import ReflexivePolytope


def positive_negative_counts(P: ReflexivePolytope, D: StandardDecomposition) -> tuple[int, int]:
    """(#triangle summands, total normalized volume of the scaled 2-faces of P°)."""
    return D.n_triangles, _negatives(P)


@lru_cache(maxsize=None)
def _negatives(P: ReflexivePolytope) -> int:
    Q = P.dual
    return sum(sf.scale ** 2 * Q.face_volume(g) for sf, g in zip(Q.scaled_faces, Q.faces2))


def euler_characteristic(P: ReflexivePolytope, D: StandardDecomposition) -> int:
    pos, neg = positive_negative_counts(P, D)
    return pos - neg


@dataclass
class GammaSystem:
    """Linear system ``x_E = phi_m(d_E)`` over edges E and matched summands m.

    Columns ``0 .. n_edges-1`` are the edge unknowns; ``summand_cols[i]``
    lists the columns of the functional of summand ``i`` (one for a segment,
    two for a triangle).
    """

    n_edges: int
    summand_cols: list[list[int]]
    rows: list[dict[int, int]]
    ncols: int

    def solution_space(self) -> list[list[Fraction]]:
        return kernel(self.rows, self.ncols)

    def edge_projection_dim(self) -> int:
        """dim of the solution space minus the part with all edge unknowns zero."""
        full = self.ncols - integer_rank(self.rows)
        # with x_E = 0 the rows only see one summand each, so ranks add up
        by_summand: dict[int, list[dict[int, int]]] = {}
        owner = {c: i for i, cols in enumerate(self.summand_cols) for c in cols}
        for r in self.rows:
            rest = {c: x for c, x in r.items() if c >= self.n_edges}
            if rest:
                by_summand.setdefault(owner[next(iter(rest))], []).append(rest)
        n_s = self.ncols - self.n_edges
        vanishing = n_s - sum(integer_rank(rs) for rs in by_summand.values())
        return full - vanishing


def edge_direction(P: ReflexivePolytope, e: int, flip: Sequence[bool] | None = None):
    a, b = P.edge_points(e)  # lexicographically ordered endpoints
    d = primitive(sub(b, a))
    if flip is not None and flip[e]:
        d = tuple(-x for x in d)
    return d


@lru_cache(maxsize=None)
def _planar_direction(P: ReflexivePolytope, k: int, e: int, flip) -> tuple[int, int]:
    return P.scaled_faces[k].to_plane(edge_direction(P, e, flip))


def gamma_system(P: ReflexivePolytope, D: StandardDecomposition, flip: Sequence[bool] | None = None) -> GammaSystem:
    em = edge_matching(P, D)
    ne = len(P.edges)
    flip_key = tuple(bool(x) for x in flip) if flip is not None else None
    col = ne
    summand_cols: list[list[int]] = []
    rows: list[dict[int, int]] = []
    for (k, j) in D.summands:
        m = D.parts[k][j]
        sf = P.scaled_faces[k]
        cols = list(range(col, col + m.dim))
        col += m.dim
        summand_cols.append(cols)
        u = m.edge_vectors[0]
        for e in em.edges[(k, j)]:
            d = _planar_direction(P, k, e, flip_key)
            row = {e: 1}
            if m.kind == "segment":
                # d is +-u; phi_m is the value on u
                s = d[0] * u[0] + d[1] * u[1]
                row[cols[0]] = -(1 if s > 0 else -1)
            else:
                for c, x in zip(cols, d):
                    if x:
                        row[c] = -x
            rows.append(row)
    return GammaSystem(ne, summand_cols, rows, col)


def gamma(P: ReflexivePolytope, D: StandardDecomposition, flip: Sequence[bool] | None = None) -> int:
    return gamma_system(P, D, flip).edge_projection_dim()


@dataclass
class InvariantReport:
    polytope: str
    decomposition: str
    sd: bool
    regular: str
    chi: int
    gamma: int
    b2: int
    vol_polar: int
    positives: int = 0
    negatives: int = 0
    orbit: int | None = None
    obstruction: str | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        if not d["extra"]:
            d.pop("extra")
        return d


def invariant_report(P: ReflexivePolytope, D: StandardDecomposition, decomposition_id: str = "",
                     orbit: int | None = None, seed: int = 0) -> InvariantReport:
    from .regularity import decide_regularity

    sd = is_simply_decomposable(P)
    verdict = decide_regularity(P, D, seed=seed)
    pos, neg = positive_negative_counts(P, D)
    g = gamma(P, D)
    return InvariantReport(
        polytope=P.name,
        decomposition=decomposition_id or decomposition_key(D),
        sd=sd,
        regular=verdict.status,
        chi=pos - neg,
        gamma=g,
        b2=g - 3,
        vol_polar=P.dual.volume(),
        positives=pos,
        negatives=neg,
        orbit=orbit,
        obstruction=verdict.obstruction,
    )


def decomposition_key(D: StandardDecomposition) -> str:
    """Compact per-face summary: number of triangles on each 2-face."""
    return ".".join(str(sum(m.kind == "triangle" for m in p)) for p in D.parts)
