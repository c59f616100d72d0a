import pytest

from toricsmooth.catalog import builtin_polygon, product_polytope
from toricsmooth.lattice import InvalidInputError, lattice_length
from toricsmooth.polytope import (
    LatticePolytope,
    NotConvexPositionError,
    ReflexivePolytope,
    face_lattice,
    polar_dual,
    product,
)

CUBE = [(x, y, z, w) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1) for w in (-1, 1)]


def test_interior_point_rejected():
    with pytest.raises(NotConvexPositionError, match="not in convex position"):
        LatticePolytope([(1, 0), (0, 1), (-1, -1), (0, 0)])


def test_cube_face_lattice():
    fl = face_lattice(LatticePolytope(CUBE))
    assert fl.f_vector() == (16, 32, 24, 8)


def test_cube_polar_is_cross_polytope():
    pd = polar_dual(LatticePolytope(CUBE))
    assert pd.reflexive
    assert len(pd.vertices) == 8
    assert pd.polytope.face_lattice.f_vector() == (8, 24, 32, 16)


def test_polar_of_non_lattice_dual():
    # origin interior but the polar has fractional vertices
    pd = polar_dual(LatticePolytope([(2, 0), (0, 1), (-1, 0), (0, -1)]))
    assert not pd.reflexive


def test_p99_combinatorics(p99):
    assert p99.poly.face_lattice.f_vector() == (9, 18, 15, 6)
    assert p99.volume() == 486
    assert p99.dual.volume() == 9


def test_p66_combinatorics(p66):
    assert p66.poly.face_lattice.f_vector() == (36, 72, 48, 12)
    assert p66.dual.volume() == 36


def test_double_dual(p66):
    assert p66.dual.dual is p66


@pytest.mark.parametrize("k,vol", [("4", 64), ("5", 49), ("7", 25), ("8", 16), ("8'", 16), ("9", 9)])
def test_square_products_polar_volume(k, vol):
    assert product_polytope(k, k).dual.volume() == vol


def test_face_duality_reverses_inclusion(p66):
    for k, f in enumerate(p66.faces2):
        star = p66.dual_face(f)
        assert len(star) == 2  # a 2-face of P is dual to an edge of P°
        assert p66.dual.edges[p66.face2_dual[k]] == star
        for i in p66.edges_of(f):
            assert star <= p66.dual_face(p66.edges[i])


def test_scaled_faces_p99(p99):
    scales = sorted(sf.scale for sf in p99.scaled_faces)
    assert scales == [1] * 15
    dual_scales = sorted(sf.scale for sf in p99.dual.scaled_faces)
    assert dual_scales == [3] * 18


def test_scaled_face_scale_is_dual_edge_length(p66):
    for k, f in enumerate(p66.faces2):
        a, b = p66.dual_face(f)
        assert p66.scaled_faces[k].scale == lattice_length(p66.dual.vertices[a], p66.dual.vertices[b])


def test_product_dimension():
    p = product(builtin_polygon(6), builtin_polygon(9))
    assert p.dim == 4 and len(p.vertices) == 18


def test_reflexive_requires_reflexive_input():
    with pytest.raises(InvalidInputError):
        ReflexivePolytope([(2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -1, -1, -1)])
