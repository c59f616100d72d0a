"""
Exact integer/rational linear algebra and low-dimensional convex geometry.

Everything here works over Python integers and :class:`fractions.Fraction`.
numpy is used only to vectorise integer cofactor computations in the
brute-force facet search, and only when the inputs are small enough that
int64 arithmetic cannot overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Sequence

import numpy as np

Vec = tuple[int, ...]


class InvalidInputError(ValueError):
    """Raised when an input violates an operation's precondition."""


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def content(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitive(v: Sequence[int]) -> Vec:
    g = content(v)
    if g == 0:
        raise InvalidInputError("zero vector has no primitive direction")
    return tuple(int(x) // g for x in v)


def lattice_length(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of unit lattice segments on the segment [a, b]."""
    return content(int(y) - int(x) for x, y in zip(a, b))


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def neg(a: Sequence[int]) -> Vec:
    return tuple(-x for x in a)


def cross2(a: Sequence, b: Sequence):
    return a[0] * b[1] - a[1] * b[0]


def mat_vec(m: Sequence[Sequence[int]], v: Sequence[int]) -> Vec:
    return tuple(dot(row, v) for row in m)


def mat_mul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(dot(row, c) for c in cols) for row in a)


def transpose(m):
    return tuple(tuple(r) for r in zip(*m))


def det(m: Sequence[Sequence]) -> Fraction | int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num / prev if isinstance(num, Fraction) else _exact_div(num, prev)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _exact_div(num, den):
    if isinstance(num, int) and isinstance(den, int):
        q, r = divmod(num, den)
        if r == 0:
            return q
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# rational elimination
# ---------------------------------------------------------------------------

def _sparse_rows(rows) -> list[dict[int, Fraction]]:
    out = []
    for r in rows:
        if isinstance(r, Mapping):
            d = {j: Fraction(x) for j, x in r.items() if x}
        else:
            d = {j: Fraction(x) for j, x in enumerate(r) if x}
        if d:
            out.append(d)
    return out


def rref(rows, ncols: int) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form of a (sparse or dense) rational matrix.

    Returns the nonzero reduced rows (as ``{column: value}`` dicts, pivot
    entry 1) and their pivot columns.
    """
    pending = _sparse_rows(rows)
    basis: dict[int, dict[int, Fraction]] = {}
    for row in pending:
        # reduce against existing pivots
        changed = True
        while changed and row:
            changed = False
            for c in sorted(row):
                if c in basis:
                    f = row[c]
                    for j, x in basis[c].items():
                        v = row.get(j, 0) - f * x
                        if v:
                            row[j] = v
                        else:
                            row.pop(j, None)
                    changed = True
                    break
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {j: x * inv for j, x in row.items()}
        # eliminate p from the other basis rows
        for q, other in basis.items():
            f = other.get(p)
            if f:
                for j, x in row.items():
                    v = other.get(j, 0) - f * x
                    if v:
                        other[j] = v
                    else:
                        other.pop(j, None)
        basis[p] = row
    pivots = sorted(basis)
    return [basis[p] for p in pivots], pivots


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def integer_rank(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank of sparse integer rows by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        row = {j: int(x) for j, x in r.items() if x}
        while row:
            p = min(row)
            piv = pivots.get(p)
            if piv is None:
                g = content(row.values())
                pivots[p] = {j: x // g for j, x in row.items()}
                break
            a, b = piv[p], row[p]
            new = {j: a * x for j, x in row.items()}
            for j, x in piv.items():
                v = new.get(j, 0) - b * x
                if v:
                    new[j] = v
                else:
                    new.pop(j, None)
            g = content(new.values()) if new else 1
            row = {j: x // g for j, x in new.items()}
    return len(pivots)


def kernel(rows, ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel ``{x : A x = 0}`` over the rationals."""
    reduced, pivots = rref(rows, ncols)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x = row.get(f)
            if x:
                v[p] = -x
        out.append(v)
    return out


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[Vec]:
    """Z-basis of ``{x in Z^n : A x = 0}`` via unimodular column reduction."""
    a = [list(map(int, r)) for r in rows]
    n = ncols
    u = [[int(i == j) for j in range(n)] for i in range(n)]  # columns of u track ops

    def colop(j, k, q):  # col_j -= q * col_k
        for r in a:
            r[j] -= q * r[k]
        for r in u:
            r[j] -= q * r[k]

    def swap(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in u:
            r[j], r[k] = r[k], r[j]

    piv = 0
    for r in a:
        if piv >= n:
            break
        while True:
            nz = [j for j in range(piv, n) if r[j] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(r[j]))
            if j0 != piv:
                swap(piv, j0)
            done = True
            for j in range(piv + 1, n):
                if r[j]:
                    colop(j, piv, r[j] // r[piv])
                    if r[j]:
                        done = False
            if done:
                piv += 1
                break
    return [tuple(u[i][j] for i in range(n)) for j in range(piv, n)]


def hermite_rows(basis: Sequence[Sequence[int]]) -> list[Vec]:
    """Row-style Hermite normal form of an integer basis (same lattice)."""
    b = [list(map(int, r)) for r in basis]
    if not b:
        return []
    n = len(b[0])
    out: list[list[int]] = []
    col = 0
    rows = b
    while rows and col < n:
        while True:
            nz = [r for r in rows if r[col] != 0]
            if len(nz) <= 1:
                break
            p = min(nz, key=lambda r: abs(r[col]))
            for r in nz:
                if r is not p:
                    q = r[col] // p[col]
                    for j in range(n):
                        r[j] -= q * p[j]
        nz = [r for r in rows if r[col] != 0]
        if nz:
            p = nz[0]
            if p[col] < 0:
                p[:] = [-x for x in p]
            for r in out:
                q = r[col] // p[col]
                for j in range(n):
                    r[j] -= q * p[j]
            out.append(p)
            rows = [r for r in rows if r is not p]
        rows = [r for r in rows if any(r)]
        col += 1
    return [tuple(r) for r in out]


def saturated_basis(vectors: Sequence[Sequence[int]], ncols: int) -> list[Vec]:
    """Hermite basis of ``span_Q(vectors) ∩ Z^n``."""
    vs = [v for v in vectors if any(v)]
    if not vs:
        return []
    perp = integer_kernel(vs, ncols)
    if not perp:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    return hermite_rows(integer_kernel(perp, ncols))


def express(x: Sequence[int], origin: Sequence[int], basis: Sequence[Vec]) -> Vec:
    """Integer coordinates of ``x - origin`` in a Hermite basis."""
    rem = [Fraction(a - b) for a, b in zip(x, origin)]
    coords = []
    for row in basis:
        p = next(j for j, v in enumerate(row) if v)
        c = rem[p] / row[p]
        coords.append(c)
        rem = [r - c * v for r, v in zip(rem, row)]
    if any(rem):
        raise InvalidInputError(f"{tuple(x)} not in the affine span")
    if any(c.denominator != 1 for c in coords):
        raise InvalidInputError(f"{tuple(x)} is not a lattice point of the span")
    return tuple(int(c) for c in coords)


def unexpress(c: Sequence[int], origin: Sequence[int], basis: Sequence[Vec]) -> Vec:
    out = list(origin)
    for ci, row in zip(c, basis):
        for j, v in enumerate(row):
            out[j] += ci * v
    return tuple(out)


def lattice_frame(points: Sequence[Sequence[int]]) -> tuple[Vec, list[Vec]]:
    """Anchor (lexicographically least point) and Hermite basis of the tangent lattice."""
    pts = sorted(tuple(map(int, p)) for p in points)
    origin = pts[0]
    basis = saturated_basis([sub(p, origin) for p in pts[1:]], len(origin))
    return origin, basis


def affine_dimension(points: Sequence[Sequence[int]]) -> int:
    pts = [tuple(p) for p in points]
    if not pts:
        return -1
    return rank([sub(p, pts[0]) for p in pts[1:]], len(pts[0]))


def extend_to_basis(d: Sequence[int]) -> tuple[Vec, Vec]:
    """A vector ``e`` with ``det(d, e) = 1`` for primitive planar ``d``."""
    a, b = d
    g, x, y = _egcd(a, b)
    if g != 1:
        raise InvalidInputError("direction is not primitive")
    # a*x + b*y = 1  ->  det((a,b), (-y, x)) = a*x + b*y = 1
    return tuple(d), (-y, x)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), (1 if a >= 0 else -1), 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


# ---------------------------------------------------------------------------
# polygons
# ---------------------------------------------------------------------------

def convex_hull_2d(points: Iterable[Sequence]) -> list[tuple]:
    """Vertices of the convex hull in counter-clockwise order (monotone chain)."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        h: list[tuple] = []
        for p in seq:
            while len(h) >= 2 and cross2(sub(h[-1], h[-2]), sub(p, h[-2])) <= 0:
                h.pop()
            h.append(p)
        return h

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def twice_area(poly: Sequence[Sequence]) -> Fraction | int:
    n = len(poly)
    return abs(sum(cross2(poly[i], poly[(i + 1) % n]) for i in range(n)))


def polygon_edges(poly: Sequence[tuple]) -> list[tuple[tuple, tuple]]:
    n = len(poly)
    return [(poly[i], poly[(i + 1) % n]) for i in range(n)]


def point_in_polygon(p, poly) -> int:
    """1 strictly inside, 0 on the boundary, -1 outside (poly counter-clockwise)."""
    if len(poly) == 1:
        return 0 if tuple(p) == tuple(poly[0]) else -1
    if len(poly) == 2:
        a, b = poly
        if cross2(sub(b, a), sub(p, a)) != 0:
            return -1
        lo, hi = min(a, b), max(a, b)
        return 0 if lo <= tuple(p) <= hi else -1
    on_edge = False
    for a, b in polygon_edges(poly):
        c = cross2(sub(b, a), sub(p, a))
        if c < 0:
            return -1
        if c == 0:
            on_edge = True
    return 0 if on_edge else 1


def polygon_lattice_points(poly: Sequence[tuple]) -> tuple[list[Vec], list[Vec]]:
    """(boundary, interior) lattice points of a convex lattice polygon."""
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    bd, inner = [], []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            s = point_in_polygon((x, y), poly)
            if s == 0:
                bd.append((x, y))
            elif s == 1:
                inner.append((x, y))
    return bd, inner


def boundary_cycle(poly: Sequence[tuple]) -> list[Vec]:
    """Boundary lattice points of a counter-clockwise lattice polygon, in order."""
    out: list[Vec] = []
    for a, b in polygon_edges(poly):
        n = lattice_length(a, b)
        step = tuple((y - x) // n for x, y in zip(a, b))
        for k in range(n):
            out.append(tuple(x + k * s for x, s in zip(a, step)))
    return out


def pick_counts(poly: Sequence[tuple]) -> tuple[int, int]:
    """(boundary, interior) lattice point counts of a ccw polygon, by Pick's formula."""
    n = len(poly)
    a2 = b = 0
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        a2 += p[0] * q[1] - p[1] * q[0]
        b += gcd(q[0] - p[0], q[1] - p[1])
    return b, (a2 - b + 2) // 2


def linear_normal_form(poly: Sequence[Sequence[int]]) -> tuple[Vec, ...]:
    """Canonical representative of a polygon up to GL(2, Z) (origin fixed).

    Requires primitive vertices, which holds for polygons whose only
    interior lattice point is the origin.
    """
    best = None
    for sign in (1, -1):
        cyc = convex_hull_2d([(p[0], sign * p[1]) for p in poly])
        n = len(cyc)
        for i in range(n):
            p, q = cyc[i], cyc[(i + 1) % n]
            g, x, y = _egcd(p[0], p[1])
            if g != 1:
                raise InvalidInputError("linear normal form needs primitive vertices")
            a = ((x, y), (-p[1], p[0]))  # sends p to (1, 0)
            w = mat_vec(a, q)
            k = -(w[0] // w[1])  # shear fixing (1, 0) moves w[0] into [0, w[1])
            m = mat_mul(((1, k), (0, 1)), a)
            img = tuple(mat_vec(m, cyc[(i + j) % n]) for j in range(n))
            if best is None or img < best:
                best = img
    return best


@dataclass(frozen=True)
class UnimodularAffineMap:
    """``x -> linear @ x + translate`` with ``|det(linear)| = 1``."""

    linear: tuple[tuple[int, ...], ...]
    translate: Vec

    def __post_init__(self):
        if abs(det(self.linear)) != 1:
            raise InvalidInputError("linear part is not unimodular")

    def __call__(self, x: Sequence[int]) -> Vec:
        return add(mat_vec(self.linear, x), self.translate)

    def inverse(self) -> "UnimodularAffineMap":
        inv = integer_inverse(self.linear)
        return UnimodularAffineMap(inv, neg(mat_vec(inv, self.translate)))

    def compose(self, other: "UnimodularAffineMap") -> "UnimodularAffineMap":
        """``self ∘ other``."""
        return UnimodularAffineMap(mat_mul(self.linear, other.linear), self(other.translate))


def integer_inverse(m: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    inv = rational_inverse(m)
    if any(x.denominator != 1 for r in inv for x in r):
        raise InvalidInputError("matrix is not invertible over Z")
    return tuple(tuple(int(x) for x in r) for r in inv)


def rational_inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise InvalidInputError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _map_from_frames(src: tuple[Vec, Vec], dst: tuple[Vec, Vec]):
    """Integer matrix sending the columns ``src`` to ``dst``, if unimodular."""
    s = ((src[0][0], src[1][0]), (src[0][1], src[1][1]))
    d = ((dst[0][0], dst[1][0]), (dst[0][1], dst[1][1]))
    m = mat_mul(d, rational_inverse(s))
    if any(Fraction(x).denominator != 1 for r in m for x in r):
        return None
    m = tuple(tuple(int(x) for x in r) for r in m)
    if abs(det(m)) != 1:
        return None
    return m


def affine_equivalent(q1: Sequence[Sequence[int]], q2: Sequence[Sequence[int]]) -> UnimodularAffineMap | None:
    """A unimodular affine map of Z^2 carrying polygon ``q1`` onto ``q2``, or None."""
    h1 = convex_hull_2d(q1)
    h2 = convex_hull_2d(q2)
    d1, d2 = affine_dimension(h1), affine_dimension(h2)
    if d1 != d2:
        raise InvalidInputError(f"dimension mismatch: {d1} vs {d2}")
    if d1 == 0:
        return UnimodularAffineMap(((1, 0), (0, 1)), sub(h2[0], h1[0]))
    if d1 == 1:
        (p, q), (r, s) = h1, h2
        if lattice_length(p, q) != lattice_length(r, s):
            return None
        _, e1 = extend_to_basis(primitive(sub(q, p)))
        _, e2 = extend_to_basis(primitive(sub(s, r)))
        lin = _map_from_frames((primitive(sub(q, p)), e1), (primitive(sub(s, r)), e2))
        return UnimodularAffineMap(lin, sub(r, mat_vec(lin, p)))
    if len(h1) != len(h2):
        return None
    target = set(h2)
    n = len(h1)
    v0 = h1[0]
    a = primitive(sub(h1[1], v0))
    b = primitive(sub(h1[-1], v0))
    for j in range(n):
        w = h2[j]
        nxt = primitive(sub(h2[(j + 1) % n], w))
        prv = primitive(sub(h2[j - 1], w))
        for img in ((nxt, prv), (prv, nxt)):
            lin = _map_from_frames((a, b), img)
            if lin is None:
                continue
            t = sub(w, mat_vec(lin, v0))
            f = UnimodularAffineMap(lin, t)
            if {f(v) for v in h1} == target:
                return f
    return None


# ---------------------------------------------------------------------------
# full-dimensional hulls in dimension <= 4
# ---------------------------------------------------------------------------

def _cofactor_normals(diffs: np.ndarray) -> np.ndarray:
    """Generalised cross products of (k, d-1, d) integer difference stacks."""
    k, m, d = diffs.shape

    def det_stack(mats):
        s = mats.shape[-1]
        if s == 1:
            return mats[:, 0, 0]
        if s == 2:
            return mats[:, 0, 0] * mats[:, 1, 1] - mats[:, 0, 1] * mats[:, 1, 0]
        out = np.zeros(mats.shape[0], dtype=np.int64)
        for j in range(s):
            minor = np.delete(np.delete(mats, 0, axis=1), j, axis=2)
            out += (-1) ** j * mats[:, 0, j] * det_stack(minor)
        return out

    cols = []
    for j in range(d):
        minor = np.delete(diffs, j, axis=2)
        cols.append((-1) ** j * det_stack(minor))
    return np.stack(cols, axis=1)


def facets(points: Sequence[Sequence[int]]) -> list[tuple[Vec, int, frozenset[int]]]:
    """Facets of a full-dimensional lattice polytope in Z^d, d <= 4.

    Returns ``(normal, offset, point_indices)`` with primitive inward
    normal, i.e. ``<normal, x> >= offset`` on the polytope with equality
    exactly on the listed points.
    """
    pts = [tuple(map(int, p)) for p in points]
    d = len(pts[0])
    if affine_dimension(pts) != d:
        raise InvalidInputError("point set is not full-dimensional")
    if d == 1:
        xs = [p[0] for p in pts]
        lo, hi = min(xs), max(xs)
        return [((1,), lo, frozenset(i for i, p in enumerate(pts) if p[0] == lo)),
                ((-1,), -hi, frozenset(i for i, p in enumerate(pts) if p[0] == hi))]
    if max(abs(x) for p in pts for x in p) > 2 ** 12:
        raise InvalidInputError("coordinates too large for the facet search")
    arr = np.array(pts, dtype=np.int64)
    combos = np.array(list(combinations(range(len(pts)), d)), dtype=np.int64)
    found: dict[frozenset[int], tuple[Vec, int]] = {}
    for chunk in np.array_split(combos, max(1, len(combos) // 20000 + 1)):
        if not len(chunk):
            continue
        base = arr[chunk[:, 0]]
        diffs = arr[chunk[:, 1:]] - base[:, None, :]
        normals = _cofactor_normals(diffs)
        nz = np.any(normals != 0, axis=1)
        normals, base, chunk = normals[nz], base[nz], chunk[nz]
        vals = normals @ arr.T - np.sum(normals * base, axis=1)[:, None]
        pos = np.all(vals >= 0, axis=1)
        negs = np.all(vals <= 0, axis=1)
        for idx in np.nonzero(pos | negs)[0]:
            on = frozenset(np.nonzero(vals[idx] == 0)[0].tolist())
            if on in found:
                continue
            n = tuple(int(x) for x in normals[idx])
            if negs[idx] and not pos[idx]:
                n = neg(n)
            n = primitive(n)
            found[on] = (n, dot(n, pts[chunk[idx][0]]))
    # a hyperplane through d affinely independent points spans a facet only if
    # the points on it have affine dimension d-1
    out = []
    for on, (n, c) in found.items():
        if affine_dimension([pts[i] for i in on]) == d - 1:
            out.append((n, c, on))
    out.sort(key=lambda f: sorted(f[2]))
    return out


def normalized_volume(points: Sequence[Sequence[int]], d: int) -> int:
    """``d!`` times the Euclidean volume measured in the lattice of the affine span."""
    pts = sorted(set(tuple(map(int, p)) for p in points))
    if affine_dimension(pts) != d:
        raise InvalidInputError(f"affine span does not have dimension {d}")
    if d == 0:
        return 1
    origin, basis = lattice_frame(pts)
    local = [express(p, origin, basis) for p in pts]
    return _nvol_full(local)


def _nvol_full(pts: list[Vec]) -> int:
    d = len(pts[0])
    if d == 1:
        xs = [p[0] for p in pts]
        return max(xs) - min(xs)
    if d == 2:
        return int(twice_area(convex_hull_2d(pts)))
    apex = pts[0]
    total = 0
    for n, c, on in facets(pts):
        h = dot(n, apex) - c
        if h == 0:
            continue
        total += h * normalized_volume([pts[i] for i in on], d - 1)
    return total


# ---------------------------------------------------------------------------
# regular subdivisions of polygons
# ---------------------------------------------------------------------------

@dataclass
class LiftedHull2D:
    """Polyhedral subdivision of a polygon induced by lower faces of a lift."""

    base: list[Vec]
    heights: dict[Vec, Fraction]
    cells: list[list[Vec]] = field(default_factory=list)

    def lattice_points(self, cell: Sequence[Vec]) -> list[Vec]:
        bd, inner = polygon_lattice_points(list(cell))
        return bd + inner

    def is_empty(self, cell: Sequence[Vec]) -> bool:
        return len(self.lattice_points(cell)) == len(cell)

    def is_unimodular_triangle(self, cell: Sequence[Vec]) -> bool:
        return len(cell) == 3 and twice_area(cell) == 1


def lower_hull_subdivision(base: Sequence[Sequence[int]], heights: Mapping) -> LiftedHull2D:
    """Project the lower faces of the lifted point set ``{(x, heights[x])}``.

    Coplanar lifted points produce non-triangular cells.
    """
    hull = convex_hull_2d(base)
    pts = sorted(tuple(p) for p in heights)
    h = {p: Fraction(heights[p]) for p in pts}
    out = LiftedHull2D([tuple(v) for v in hull], h)
    if affine_dimension(pts) < 2:
        out.cells = [list(hull)]
        return out
    seen: set[frozenset] = set()
    n = len(pts)
    for i, j, k in combinations(range(n), 3):
        a, b, c = pts[i], pts[j], pts[k]
        den = cross2(sub(b, a), sub(c, a))
        if den == 0:
            continue
        # plane z = alpha*x + beta*y + gamma through the three lifts
        db, dc = h[b] - h[a], h[c] - h[a]
        ub, uc = sub(b, a), sub(c, a)
        alpha = Fraction(db * uc[1] - dc * ub[1], den)
        beta = Fraction(dc * ub[0] - db * uc[0], den)
        gamma = h[a] - alpha * a[0] - beta * a[1]
        on = []
        ok = True
        for p in pts:
            z = alpha * p[0] + beta * p[1] + gamma
            if h[p] < z:
                ok = False
                break
            if h[p] == z:
                on.append(p)
        if not ok:
            continue
        key = frozenset(on)
        if key in seen:
            continue
        seen.add(key)
        out.cells.append(convex_hull_2d(on))
    out.cells.sort()
    return out


# ---------------------------------------------------------------------------
# exact linear feasibility
# ---------------------------------------------------------------------------

def feasible_point(forms: Sequence[Sequence], dim: int) -> list[Fraction] | None:
    """A point ``c`` with ``f . c >= 1`` for every row ``f``, or None.

    Phase-one simplex over the rationals with Bland's rule, so the answer
    is exact. Homogeneous strict inequalities ``f . c > 0`` are feasible
    iff this system is.
    """
    m = len(forms)
    if m == 0:
        return [Fraction(0)] * dim
    # variables: p (dim), q (dim), s (m), a (m);  f(p - q) - s + a = 1
    nv = 2 * dim + 2 * m
    rows = []
    for i, f in enumerate(forms):
        r = [Fraction(0)] * (nv + 1)
        for j in range(dim):
            r[j] = Fraction(f[j])
            r[dim + j] = -Fraction(f[j])
        r[2 * dim + i] = Fraction(-1)
        r[2 * dim + m + i] = Fraction(1)
        r[nv] = Fraction(1)
        rows.append(r)
    basis = [2 * dim + m + i for i in range(m)]
    # objective: minimise sum of artificials -> reduced costs
    obj = [Fraction(0)] * (nv + 1)
    for r in rows:
        for j in range(nv + 1):
            obj[j] -= r[j]
    for i in range(m):
        obj[2 * dim + m + i] += 1
    while True:
        enter = next((j for j in range(nv) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[nv] / r[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded; cannot happen for phase one
            break
        i = best[1]
        piv = rows[i][enter]
        rows[i] = [x / piv for x in rows[i]]
        for k, r in enumerate(rows):
            if k != i and r[enter]:
                f = r[enter]
                rows[k] = [x - f * y for x, y in zip(r, rows[i])]
        if obj[enter]:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, rows[i])]
        basis[i] = enter
    if -obj[nv] != 0:
        return None
    val = [Fraction(0)] * nv
    for i, b in enumerate(basis):
        val[b] = rows[i][nv]
    return [val[j] - val[dim + j] for j in range(dim)]
