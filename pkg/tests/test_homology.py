from __future__ import annotations

from pathlib import Path

import pytest

from ccrk.complex import VertexMap, boundary_of_simplex, identity_map, make_complex, simplex
from ccrk.errors import NotASphereError, NotSimplicialError
from ccrk.facetfile import read_facets
from ccrk.homology import (
    IntegerMatrix,
    boundary_matrices,
    boundary_matrix,
    degree,
    degree_report,
    fundamental_cycle,
    induced_chain_map,
    rank_mod_p,
    rational_rank,
    reduced_betti_mod2,
    reduced_betti_rational,
    reduced_homology,
    smith_normal_form,
)
from ccrk.homology.snf import determinant, gcd_all
from ccrk.labels import Interval, Subset
from ccrk.surfaces import rho_map
from ccrk.tubings import associahedron_dual

from oracles import sympy_invariants, sympy_reduced_betti

FIXTURES = Path(__file__).parent / "fixtures"


# -- Smith normal form ------------------------------------------------------------------


def test_snf_diagonal_example():
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)


def test_snf_square_example():
    assert smith_normal_form([[2, 4], [6, 8]]).diagonal == (2, 4)


def test_snf_zero_matrix():
    sf = smith_normal_form(IntegerMatrix(3, 4))
    assert sf.diagonal == () and sf.rank == 0


def test_snf_transforms_reproduce_diagonal():
    A = IntegerMatrix.from_dense([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    sf = smith_normal_form(A, transforms=True)
    assert sf.diagonal == (2, 6, 12)
    assert sf.U @ A @ sf.V == sf.S()
    assert abs(determinant(sf.U)) == 1 and abs(determinant(sf.V)) == 1


def test_snf_paths_agree_and_match_sympy():
    A = [[0, 3, -6, 0], [4, 0, 8, 2], [2, 3, -2, 1]]
    fast = smith_normal_form(A).diagonal
    slow = smith_normal_form(A, transforms=True).diagonal
    assert fast == slow
    assert list(fast) == sympy_invariants(A)


def test_snf_product_is_gcd_of_maximal_minors():
    A = [[2, 4], [6, 8]]
    d = smith_normal_form(A).diagonal
    assert d[0] * d[1] == abs(determinant(IntegerMatrix.from_dense(A)))
    assert d[0] == gcd_all(v for r in A for v in r)


def test_matrix_rejects_out_of_range_and_drops_zeros():
    with pytest.raises(IndexError):
        IntegerMatrix(2, 2, {(2, 0): 1})
    assert IntegerMatrix(2, 2, {(0, 0): 0}).is_zero()


def test_cross_check_ranks():
    A = IntegerMatrix.from_dense([[2, 0], [0, 2]])
    assert rational_rank(A) == 2
    assert rank_mod_p(A, 2) == 0
    assert rank_mod_p(A, 3) == 2


# -- boundary matrices ---------------------------------------------------------------------


def test_edge_boundary_column():
    d1 = boundary_matrix(simplex("ab"), 1)
    assert d1.to_dense() == [[-1], [1]]


def test_triangle_boundary_rank():
    d1 = boundary_matrix(boundary_of_simplex("abc"), 1)
    assert d1.shape == (3, 3) and smith_normal_form(d1).rank == 2


@pytest.mark.parametrize("K", [associahedron_dual(6), boundary_of_simplex("abcde"),
                               make_complex([["a", "b", "c"], ["c", "d"], ["e"]])])
def test_boundary_squares_to_zero(K):
    cc = boundary_matrices(K)
    for k in range(1, K.dim + 1):
        assert (cc.d[k - 1] @ cc.d[k]).is_zero()


# -- reduced homology -------------------------------------------------------------------------


def test_tetrahedron_boundary():
    h = reduced_homology(boundary_of_simplex("abcd"))
    assert [g.betti for g in h.groups] == [0, 0, 1]
    assert h.is_sphere(2)


def test_d5_is_a_two_sphere():
    h = reduced_homology(associahedron_dual(5))
    assert h.betti() == {0: 0, 1: 0, 2: 1}


def test_projective_plane_has_two_torsion():
    K = read_facets(FIXTURES / "rp2.facets")
    assert K.f_vector() == (6, 15, 10)
    h = reduced_homology(K)
    assert h[1].betti == 0 and h[1].torsion == (2,)
    assert h[0].is_zero() and h[2].is_zero()
    assert reduced_betti_rational(K) == {0: 0, 1: 0, 2: 0}
    # over GF(2) the torsion shows up as H_1 = H_2 = Z/2
    assert reduced_betti_mod2(K) == {0: 0, 1: 1, 2: 1}
    assert sympy_reduced_betti(K.labelled_facets()) == {0: 0, 1: 0, 2: 0}


def test_two_points_and_empty_complex():
    h = reduced_homology(make_complex([["a"], ["b"]]))
    assert h[0].betti == 1
    e = reduced_homology(make_complex([]))
    assert e[-1].betti == 1


def test_profile_serialisation_fields():
    h = reduced_homology(boundary_of_simplex("abc"))
    assert h.to_json() == [{"dim": 0, "betti": 0, "torsion": []}, {"dim": 1, "betti": 1, "torsion": []}]


def test_euler_poincare_for_connected_complexes():
    from ccrk import euler_characteristic
    for K in (associahedron_dual(6), boundary_of_simplex("abcde"), simplex("abc")):
        assert reduced_homology(K).euler_poincare() == euler_characteristic(K) - 1


# -- fundamental cycles and degree ---------------------------------------------------------------


def test_triangle_fundamental_cycle_signs():
    K = boundary_of_simplex("abc")
    z = fundamental_cycle(K)
    assert z.vector(K) == [1, -1, 1]


def test_pentagon_fundamental_cycle():
    K = associahedron_dual(4)
    z = fundamental_cycle(K)
    v = z.vector(K)
    assert len(v) == 5 and all(abs(x) == 1 for x in v)
    assert not boundary_matrix(K, 1).apply(dict(enumerate(v)))
    assert z.coefficients[z.anchor] == 1 and z.anchor == min(z.coefficients)


def test_fundamental_cycle_rejects_non_spheres():
    with pytest.raises(NotASphereError):
        fundamental_cycle(make_complex([["a", "b"], ["c", "d"]]))


def test_fundamental_cycle_of_non_pseudomanifold():
    # three triangles on one edge plus a tetrahedron boundary: top kernel rank 1
    K = make_complex([list(t) for t in boundary_of_simplex("abcd").labelled_facets()] + [["a", "b", "e"]])
    z = fundamental_cycle(K)
    assert len(z.coefficients) == 4


def test_identity_chain_map_and_degree():
    K = boundary_of_simplex("abcd")
    f = identity_map(K)
    for k in range(3):
        M = induced_chain_map(f, k)
        assert M == IntegerMatrix.identity(len(K.simplices(k)))
    assert degree(f) == 1


def test_reflection_has_degree_minus_one():
    K = boundary_of_simplex("abcd")
    f = VertexMap(K, K, {"a": "b", "b": "a", "c": "c", "d": "d"})
    assert degree(f) == -1


def test_rho_chain_map_in_dimension_zero():
    f = rho_map(2)
    M = induced_chain_map(f, 0)
    assert sorted(M.entries.values()) == [1, 1]
    assert f(Subset((1,))) == Interval(1, 1) and f(Subset((2,))) == Interval(2, 2)
    assert abs(degree(f)) == 1


def test_chain_map_commutes_with_boundary():
    D5 = associahedron_dual(5)
    f = identity_map(D5)
    for k in range(1, 3):
        lhs = boundary_matrix(D5, k) @ induced_chain_map(f, k)
        rhs = induced_chain_map(f, k - 1) @ boundary_matrix(D5, k)
        assert lhs == rhs


def test_rho_chain_map_commutes_with_boundary():
    # rho over N = 4 lands in the interval copy of D_5 and collapses simplices
    f = rho_map(4)
    for k in range(1, 3):
        lhs = boundary_matrix(f.target, k) @ induced_chain_map(f, k)
        rhs = induced_chain_map(f, k - 1) @ boundary_matrix(f.source, k)
        assert lhs == rhs
    assert any(not induced_chain_map(f, 2).apply({j: 1}) for j in range(len(f.source.simplices(2))))


def test_rho_degree_small_cases():
    for N in (4, 6):
        rep = degree_report(rho_map(N))
        assert abs(rep.degree) == 1
        assert rep.to_json()["abs_degree"] == 1


def test_degree_preconditions():
    K = boundary_of_simplex("abc")
    with pytest.raises(NotSimplicialError):
        induced_chain_map(VertexMap(simplex("ab"), make_complex([["x"], ["y"]]), {"a": "x", "b": "y"}), 1)
    with pytest.raises(NotASphereError):
        degree(VertexMap(K, simplex("abc"), {v: v for v in "abc"}))  # target is a disc


def test_degree_sign_normalisation_is_irrelevant_for_abs():
    # relabelling flips canonical orientations but not |deg|
    K = boundary_of_simplex("abcd")
    L = boundary_of_simplex("wxyz")
    f = VertexMap(K, L, {"a": "z", "b": "y", "c": "x", "d": "w"})
    g = VertexMap(K, L, {"a": "w", "b": "x", "c": "y", "d": "z"})
    assert abs(degree(f)) == abs(degree(g)) == 1
