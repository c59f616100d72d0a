import random

import pytest

from toricsmooth.catalog import product_polytope
from toricsmooth.lattice import rank
from toricsmooth.minkowski import edge_matching, enumerate_decomposition_data
from toricsmooth.polytope import ReflexivePolytope
from toricsmooth.invariants import (
    euler_characteristic,
    gamma,
    gamma_system,
    invariant_report,
    positive_negative_counts,
)

from conftest import class_of

FREE_SUM = [(1, 0, 0, 0), (0, 1, 0, 0), (-1, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (0, 0, -1, -1)]


@pytest.fixture(scope="module")
def free_sum():
    P = ReflexivePolytope(FREE_SUM, name="free-sum")
    Ds = list(enumerate_decomposition_data(P))
    assert len(Ds) == 1
    return P, Ds[0]


def first_D(k1, k2):
    P = product_polytope(k1, k2)
    return P, next(iter(enumerate_decomposition_data(P)))


def prop_b2(n1, n2):
    """Case analysis for b2 on P6 x P6 in terms of the two triangle counts."""
    pair = sorted((n1, n2))
    if pair == [6, 6]:
        return 5
    if pair == [0, 6]:
        return 4
    if pair == [0, 0] or (pair[1] == 6 and pair[0] not in (0, 6)):
        return 3
    if pair[0] == 0 and pair[1] not in (0, 6):
        return 2
    return 1


# -- Euler characteristic ---------------------------------------------------

def test_p99_split(p99, d99):
    assert positive_negative_counts(p99, d99) == (18, 162)
    assert euler_characteristic(p99, d99) == -144


@pytest.mark.parametrize("k1,k2,chi", [(7, 7, -100), (4, 9, -204), (8, 8, -128), (5, 5, -56)])
def test_chi_examples(k1, k2, chi):
    P, D = first_D(k1, k2)
    assert euler_characteristic(P, D) == chi


def test_free_sum_counts(free_sum):
    P, D = free_sum
    assert positive_negative_counts(P, D) == (54, 216)


# -- gamma ------------------------------------------------------------------

def test_free_sum_gamma_system(free_sum):
    P, D = free_sum
    system = gamma_system(P, D)
    assert system.n_edges == 15
    assert len(system.solution_space()) == 5
    assert gamma(P, D) == 5


def test_p99_gamma(p99, d99):
    assert gamma(p99, d99) == 4


def test_every_edge_constrained(p66):
    D = next(iter(enumerate_decomposition_data(p66)))
    system = gamma_system(p66, D)
    used = {e for r in system.rows for e in r if e < system.n_edges}
    assert used == set(range(system.n_edges))


@pytest.mark.parametrize("k1,k2", [(9, 9), (6, 7), (5, 8)])
def test_summand_relations(k1, k2):
    """Segments tie their matched edges to one value; triangles leave two free."""
    P, D = first_D(k1, k2)
    system = gamma_system(P, D)
    basis = system.solution_space()
    em = edge_matching(P, D)
    for (k, j), edges in em.edges.items():
        m = D.parts[k][j]
        sub = [[v[e] for e in edges] for v in basis]
        assert rank(sub, len(edges)) <= (1 if m.kind == "segment" else 2)


@pytest.mark.parametrize("k1,k2", [(6, 6), (6, 5), (4, 8), (9, 9)])
def test_gamma_matches_kernel_projection(k1, k2):
    """The rank shortcut agrees with projecting an explicit kernel basis."""
    P = product_polytope(k1, k2)
    for D in list(enumerate_decomposition_data(P))[:6]:
        system = gamma_system(P, D)
        basis = system.solution_space()
        assert gamma(P, D) == rank([v[: system.n_edges] for v in basis], system.n_edges)


@pytest.mark.parametrize("seed", range(4))
def test_gamma_orientation_invariant(p66, seed):
    rng = random.Random(seed)
    D = next(iter(enumerate_decomposition_data(p66)))
    flip = [rng.random() < 0.5 for _ in p66.edges]
    assert gamma(p66, D, flip) == gamma(p66, D)


def test_p66_case_analysis(p66, p66_orbits):
    """chi = 2(n1+n2) - 72 and b2 follows the membership pattern in {0, 6}."""
    for D, lab in zip(p66_orbits.representatives, p66_orbits.class_labels):
        n1, n2 = class_of(lab)
        assert euler_characteristic(p66, D) == 2 * n1 + 2 * n2 - 72
        assert positive_negative_counts(p66, D) == (2 * n1 + 2 * n2, 72)
        assert gamma(p66, D) - 3 == prop_b2(n1, n2)
    types = {(prop_b2(*class_of(lab)), 2 * sum(class_of(lab)) - 72) for lab in p66_orbits.class_labels}
    assert len(types) == 22


# -- reports ----------------------------------------------------------------

def test_report_p99(p99, d99):
    r = invariant_report(p99, d99)
    assert (r.sd, r.regular, r.chi, r.gamma, r.b2, r.vol_polar) == (True, "regular", -144, 4, 1, 9)
    assert (r.positives, r.negatives) == (18, 162)
    assert "extra" not in r.to_dict()


@pytest.mark.parametrize("k1,k2,chi,b2,vol", [(8, 8, -128, 1, 16), (5, 5, -56, 3, 49)])
def test_report_examples(k1, k2, chi, b2, vol):
    P, D = first_D(k1, k2)
    r = invariant_report(P, D)
    assert (r.chi, r.b2, r.vol_polar) == (chi, b2, vol)
    assert r.chi % 2 == 0 and r.b2 >= 1
    assert r.positives - r.negatives == r.chi
