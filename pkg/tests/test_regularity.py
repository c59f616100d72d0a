import random
from fractions import Fraction

import pytest

from toricsmooth.catalog import product_polytope
from toricsmooth.lattice import InvalidInputError, content, mat_mul, polygon_lattice_points
from toricsmooth.minkowski import enumerate_decomposition_data
from toricsmooth.regularity import (
    PreconditionError,
    build_orientation,
    classify_hollow,
    consistency_rows,
    consistency_space,
    decide_regularity,
    face_walks,
    monodromy_matrix,
    verify_regular_slope,
)

from conftest import class_of


def rep_of(p66_orbits, cls):
    for D, lab in zip(p66_orbits.representatives, p66_orbits.class_labels):
        if class_of(lab) == cls:
            return D
    raise KeyError(cls)


# -- orientation ------------------------------------------------------------

def test_orientation_total(p99):
    o = build_orientation(p99)
    Q = p99.dual
    for s, sigma in enumerate(Q.faces2):
        for t in Q.edges_of(sigma):
            assert o.sgn[(s, t)] in (1, -1)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_flips_change_sgn_multiplicatively(p99, seed):
    base = build_orientation(p99)
    o = build_orientation(p99, seed=seed)
    assert any(o.face_flip) or any(o.edge_flip)
    for (s, t), v in base.sgn.items():
        expected = v * (-1 if o.edge_flip[t] else 1) * (-1 if o.face_flip[s] else 1)
        assert o.sgn[(s, t)] == expected


# -- consistency ------------------------------------------------------------

def test_zero_in_space(p99, d99):
    space = consistency_space(p99, d99, build_orientation(p99))
    assert space.contains([0] * d99.n_summands)
    for b in space.basis:
        assert space.contains(b)


def test_p99_has_strictly_convex_point(p99, d99):
    v = decide_regularity(p99, d99)
    assert v.status == "regular"
    for part_k, part in enumerate(d99.parts):
        vals = [v.witness[d99.summand_index[(part_k, j)]] for j in range(len(part))]
        assert len(set(vals)) == len(vals)


def test_n1_equal_one_forces_equal_slopes(p66, p66_orbits):
    D = rep_of(p66_orbits, (0, 1))
    v = decide_regularity(p66, D)
    assert v.status == "irregular"
    assert v.obstruction_form is not None
    space = consistency_space(p66, D, build_orientation(p66))
    # the reported hyperplane contains the whole space
    for b in space.basis:
        assert sum(c * b[i] for i, c in v.obstruction_form.items()) == 0


# -- decision ---------------------------------------------------------------

@pytest.mark.parametrize("cls,expected", [
    ((2, 2), "regular"),
    ((3, 5), "irregular"),
    ((0, 0), "regular"),
    ((6, 6), "regular"),
    ((1, 6), "irregular"),
    ((4, 6), "regular"),
])
def test_p66_samples(p66, p66_orbits, cls, expected):
    assert decide_regularity(p66, rep_of(p66_orbits, cls)).status == expected


def test_p77_regular_with_verified_witness():
    P = product_polytope(7, 7)
    D = next(iter(enumerate_decomposition_data(P)))
    v = decide_regularity(P, D)
    assert v.status == "regular"
    ok, certs = verify_regular_slope(P, D, v.witness)
    assert ok and len(certs) == len(P.dual.faces2)


def test_witness_scaling(p66, p66_orbits):
    D = rep_of(p66_orbits, (2, 3))
    v = decide_regularity(p66, D)
    assert v.status == "regular"
    for q in (Fraction(1, 7), Fraction(5), Fraction(22, 3)):
        assert verify_regular_slope(p66, D, [q * x for x in v.witness])[0]


def test_wrong_decomposition_rejected(p66, p99, d99):
    D = next(iter(enumerate_decomposition_data(p66)))
    with pytest.raises(InvalidInputError):
        decide_regularity(p99, D)


def test_precondition_errors(p99, d99):
    with pytest.raises(PreconditionError, match="not pairwise distinct"):
        verify_regular_slope(p99, d99, [0] * d99.n_summands)
    v = decide_regularity(p99, d99)
    bad = list(v.witness)
    bad[0] += 1
    with pytest.raises(PreconditionError):
        verify_regular_slope(p99, d99, bad)


def test_bad_cells_only_on_hollow_faces():
    """Non-triangular empty cells only ever appear on hollow scaled faces."""
    P = product_polytope(8, 9)  # mixes 2*Delta faces with non-hollow ones
    D = next(iter(enumerate_decomposition_data(P)))
    orient = build_orientation(P)
    space = consistency_space(P, D, orient)
    rng = random.Random(1)
    seen_bad = 0
    for _ in range(60):
        V = space.point([rng.randint(-1000, 1000) for _ in range(space.dim)])
        try:
            _, certs = verify_regular_slope(P, D, V, orient)
        except PreconditionError:
            continue
        for c in certs:
            if c.bad_cells:
                seen_bad += 1
                assert classify_hollow(P.dual.scaled_faces[c.s].polygon) != "not-hollow"
    assert seen_bad > 0


# -- hollow polygons ----------------------------------------------------------

def test_classify_hollow():
    assert classify_hollow([(0, 0), (2, 0), (0, 2)]) == "twice-standard-simplex"
    assert classify_hollow([(0, 0), (2, 0), (0, 1), (2, 1)]) == "cayley-of-segments"
    assert classify_hollow([(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]) == "not-hollow"
    assert classify_hollow([(0, 0), (1, 0), (0, 1)]) == "cayley-of-segments"


def test_two_delta_face_with_forced_square():
    """On a 2*Delta face some consistent-looking boundary slopes give an empty square."""
    from toricsmooth.lattice import lower_hull_subdivision

    base = [(0, 0), (2, 0), (0, 2)]
    heights = {(0, 0): 0, (1, 0): 0, (2, 0): 1, (1, 1): 0, (0, 2): 1, (0, 1): 0}
    hull = lower_hull_subdivision(base, heights)
    bad = [c for c in hull.cells if hull.is_empty(c) and not hull.is_unimodular_triangle(c)]
    assert bad == [[(0, 0), (1, 0), (1, 1), (0, 1)]]


# -- monodromy --------------------------------------------------------------

def _gcd_entries(m):
    return content([x for row in m for x in row])


def test_monodromy_identity_cases(p99):
    Q = p99.dual
    a, b, _ = Q.facet_pairs()[0]
    assert monodromy_matrix(p99, a, b, 0, 0) == tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
    assert monodromy_matrix(p99, a, a, 0, 1) == tuple(tuple(int(i == j) for j in range(4)) for i in range(4))


def test_monodromy_p99_factor(p99):
    Q = p99.dual
    for a, b, s in Q.facet_pairs():
        sigma = Q.faces2[s]
        for t in Q.edges_of(sigma):
            v1, v2 = sorted(Q.edges[t])
            T = monodromy_matrix(p99, a, b, v1, v2)
            N = [[T[i][j] - int(i == j) for j in range(4)] for i in range(4)]
            assert all(x == 0 for row in mat_mul(N, N) for x in row)
            assert _gcd_entries(N) == 3


def test_face_walk_points_are_boundary(p66):
    D = next(iter(enumerate_decomposition_data(p66)))
    for walk in face_walks(p66, D, build_orientation(p66)):
        bd, _ = polygon_lattice_points(p66.dual.scaled_faces[walk.s].polygon)
        assert sorted(walk.points) == sorted(bd)


def test_consistency_rows_one_per_dual_face(p66):
    D = next(iter(enumerate_decomposition_data(p66)))
    rows = consistency_rows(p66, D, build_orientation(p66))
    assert len(rows) == len(p66.dual.faces2)
    # coefficients are signed multiplicities bounded by the face perimeter
    for r, sf in zip(rows, p66.dual.scaled_faces):
        assert sum(abs(c) for c in r.values()) <= 2 * sf.scale * len(sf.cycle_edges)


def test_verdict_independent_of_orientation(p66, p66_orbits):
    for cls in [(2, 2), (3, 5), (1, 2)]:
        D = rep_of(p66_orbits, cls)
        base = decide_regularity(p66, D).status
        for seed in (4, 9):
            assert decide_regularity(p66, D, orient=build_orientation(p66, seed)).status == base
