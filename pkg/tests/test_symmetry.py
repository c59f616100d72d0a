import random

import pytest

from toricsmooth.catalog import hexagon_faces, product_polytope
from toricsmooth.lattice import InvalidInputError
from toricsmooth.minkowski import enumerate_decomposition_data
from toricsmooth.polytope import ReflexivePolytope
from toricsmooth.symmetry import (
    DecompositionSpace,
    LatticeAutomorphism,
    act,
    automorphism_group,
    orbits,
)

CUBE = [(x, y, z, w) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1) for w in (-1, 1)]

# orbit counts per class (n1, n2) with n1 <= n2
ORBIT_TABLE = [
    [1, 1, 3, 3, 3, 1, 1],
    [0, 1, 3, 3, 3, 1, 1],
    [0, 0, 6, 9, 9, 3, 3],
    [0, 0, 0, 6, 9, 3, 3],
    [0, 0, 0, 0, 6, 3, 3],
    [0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 1],
]

SWAP = LatticeAutomorphism(((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0)))
IDENTITY = LatticeAutomorphism(tuple(tuple(int(i == j) for j in range(4)) for i in range(4)))


def ordered_counts(P, D):
    """(#hexagons P6 x {w} with triangles, #hexagons {v} x P6 with triangles)."""
    n = [0, 0]
    for k, factor, _ in hexagon_faces(P):
        if len(P.faces2[k]) == 6:
            n[factor] += any(m.kind == "triangle" for m in D.parts[k])
    return tuple(n)


@pytest.fixture(scope="module")
def group66(p66):
    return automorphism_group(p66)


def test_group_orders(group66):
    assert len(group66) == 288
    assert len(automorphism_group(ReflexivePolytope(CUBE))) == 384
    assert len(automorphism_group(product_polytope(5, 6))) == 24


def test_group_elements_are_automorphisms(p66, group66):
    verts = set(p66.vertices)
    for g in group66:
        assert {g(v) for v in p66.vertices} == verts


def test_identity_action(p66):
    for D in list(enumerate_decomposition_data(p66))[:20]:
        assert act(p66, IDENTITY, D) == D


def test_swap_exchanges_factors(p66):
    rng = random.Random(3)
    space = DecompositionSpace(p66)
    for _ in range(25):
        code = space.codes[rng.randrange(len(space))]
        D = space.decomposition(code)
        a, b = ordered_counts(p66, D)
        assert ordered_counts(p66, act(p66, SWAP, D)) == (b, a)


def test_non_automorphism_rejected(p66):
    shear = LatticeAutomorphism(((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
    D = next(iter(enumerate_decomposition_data(p66)))
    with pytest.raises(InvalidInputError):
        act(p66, shear, D)


def test_action_is_a_group_action(p66, group66):
    rng = random.Random(5)
    space = DecompositionSpace(p66)
    for _ in range(10):
        D = space.decomposition(space.codes[rng.randrange(len(space))])
        g, h = rng.choice(group66), rng.choice(group66)
        assert act(p66, g, act(p66, h, D)) == act(p66, g @ h, D)


def test_p66_orbits(p66_orbits):
    assert len(p66_orbits) == 91
    assert p66_orbits.group_order == 288
    assert sum(p66_orbits.orbit_sizes) == 4096
    counts = p66_orbits.class_counts()
    got = [[counts.get(f"({a},{b})", 0) for b in range(7)] for a in range(7)]
    assert got == ORBIT_TABLE
    assert counts["(2,3)"] == 9 and counts["(0,0)"] == 1


def test_orbit_sizes_divide_group_order(p66_orbits):
    for size, members in zip(p66_orbits.orbit_sizes, p66_orbits.members):
        assert 288 % size == 0
        assert len(members) == size


def test_representatives_are_least(p66, p66_orbits):
    space = DecompositionSpace(p66)
    for D, members in zip(p66_orbits.representatives, p66_orbits.members):
        code = space.code_of(D)
        assert code == min(tuple(int(x) for x in space.codes[i]) for i in members)


def test_orbits_closed_under_group(p66, p66_orbits, group66):
    space = DecompositionSpace(p66)
    rng = random.Random(11)
    for members in rng.sample(p66_orbits.members, 10):
        orbit = {tuple(int(x) for x in space.codes[i]) for i in members}
        D = space.decomposition(space.codes[members[0]])
        for g in rng.sample(group66, 12):
            assert space.code_of(act(p66, g, D)) in orbit


def test_p56_hexagon_factor_acts_trivially():
    P = product_polytope(5, 6)
    G = automorphism_group(P)

    def fixes_pentagon_block(g):
        m = g.matrix
        return all(m[i][j] == (1 if i == j else 0) for i in range(4) for j in range(4) if i < 2 or j < 2)

    hexagon_factor = [g for g in G if fixes_pentagon_block(g)]
    assert len(hexagon_factor) == 12
    assert len(orbits(P, group=hexagon_factor)) == 72
    assert len(orbits(P)) == 42
