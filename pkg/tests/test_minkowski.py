from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsmooth.catalog import product_family, product_polytope
from toricsmooth.lattice import InvalidInputError, cross2, mat_vec
from toricsmooth.minkowski import (
    SummandProfile,
    count_decompositions,
    edge_matching,
    edge_profile,
    enumerate_decomposition_data,
    enumerate_summand_decompositions,
    is_simply_decomposable,
)
from toricsmooth.polytope import ReflexivePolytope

HEXAGON = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]


def scale(poly, k):
    return [(k * x, k * y) for x, y in poly]


def kinds(dec):
    return Counter(m.kind for m in dec)


def test_three_delta_unique():
    decs = enumerate_summand_decompositions([(0, 0), (3, 0), (0, 3)])
    assert len(decs) == 1
    assert kinds(decs[0]) == {"triangle": 3}


def test_unit_square_unique():
    decs = enumerate_summand_decompositions([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert len(decs) == 1
    assert kinds(decs[0]) == {"segment": 2}


def test_hexagon_two_ways():
    decs = enumerate_summand_decompositions(HEXAGON)
    assert sorted(tuple(sorted(kinds(d).items())) for d in decs) == [
        (("segment", 3),),
        (("triangle", 2),),
    ]


def test_double_hexagon_three_ways():
    decs = enumerate_summand_decompositions(scale(HEXAGON, 2))
    assert sorted(kinds(d)["triangle"] for d in decs) == [0, 2, 4]
    assert sorted(kinds(d)["segment"] for d in decs) == [0, 3, 6]


def test_small_triangle_not_decomposable():
    assert enumerate_summand_decompositions([(1, 0), (0, 1), (-1, -1)]) == []


def test_profile_validation():
    with pytest.raises(InvalidInputError):
        SummandProfile("segment", ((2, 0), (-2, 0)))
    with pytest.raises(InvalidInputError):
        SummandProfile("triangle", ((1, 1), (-2, 1), (1, -2)))  # det 3
    with pytest.raises(InvalidInputError):
        SummandProfile("triangle", ((1, 0), (0, 1), (1, 1)))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([((1, 1), (0, 1)), ((2, 1), (1, 1)), ((0, -1), (1, 0)), ((-1, 0), (0, 1))]),
       st.integers(1, 3))
def test_counts_invariant_under_unimodular_maps(m, k):
    poly = scale(HEXAGON, k)
    image = [mat_vec(m, p) for p in poly]
    if m[0][0] * m[1][1] - m[0][1] * m[1][0] < 0:
        image = image[::-1]
    assert len(enumerate_summand_decompositions(poly)) == len(enumerate_summand_decompositions(image))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 2))
def test_conservation_and_profiles(k, j):
    poly = scale([(0, 0), (1, 0), (0, 1)], k) if j == 1 else scale(HEXAGON, k)
    for dec in enumerate_summand_decompositions(poly):
        got = Counter(v for m in dec for v in m.edge_vectors)
        assert got == edge_profile(poly)
        for m in dec:
            if m.kind == "triangle":
                assert abs(cross2(m.edge_vectors[0], m.edge_vectors[1])) == 1


def test_decomposition_counts(p99, p66):
    assert count_decompositions(p99) == 1
    assert count_decompositions(p66) == 4096
    assert count_decompositions(product_polytope(5, 6)) == 72
    assert sum(1 for _ in enumerate_decomposition_data(p99)) == 1


def test_all_labelled_products_sd():
    for a, b in product_family():
        assert is_simply_decomposable(product_polytope(a, b))


def test_not_sd_iterator_empty(caplog):
    tri = [(1, 0), (0, 1), (-1, -1)]
    verts = [(a[0], a[1], b[0], b[1]) for a in tri for b in tri]
    P = ReflexivePolytope(verts, name="P3xP3")
    assert not is_simply_decomposable(P)
    with caplog.at_level("WARNING"):
        assert list(enumerate_decomposition_data(P)) == []
    assert "not decomposable" in caplog.text


def test_p99_segment_matching(p99, d99):
    em = edge_matching(p99, d99)
    for (k, j), edges in em.edges.items():
        m = d99.parts[k][j]
        if m.kind == "segment":
            assert len(edges) == 2  # the two parallel edges of a square face
        else:
            assert len(edges) == 3


def test_segment_set_sizes(p66):
    Q = p66.dual
    for D in [next(iter(enumerate_decomposition_data(p66)))]:
        em = edge_matching(p66, D)
        for (s, t), S in em.S.items():
            sigma_star = Q.face2_dual[s]
            assert len(S) == p66.edge_length(sigma_star) * Q.edge_length(t)
            assert len(set(S)) == len(S)
