from __future__ import annotations

import itertools

import pytest

from ccrk import (
    barycentric_subdivision,
    euler_characteristic,
    find_isomorphism,
    identity_map,
    is_injective_simplicial,
    is_isomorphism,
    is_simplicial,
    link,
    make_complex,
    skeleton,
    span,
)
from ccrk.complex import VertexMap, boundary_of_simplex, flag_complex, simplex, star_count
from ccrk.errors import LabelError, MalformedFacetError, UnknownVertexError
from ccrk.homology import reduced_homology
from ccrk.labels import Chord, Flag, Interval, Subset, parse_label
from ccrk.tubings import associahedron_dual, path_graph, tube_complex

from oracles import brute_flag_facets


# -- labels -----------------------------------------------------------------------


@pytest.mark.parametrize("token", ["S{1,2,5}", "I[2..4]", "I'[1..3]", "I''[1..2]", "P(1,4)",
                                   "F(S{1,2}|S{1})", "F(F(a|b)|c)", "v7"])
def test_label_roundtrip(token):
    assert str(parse_label(token)) == token


@pytest.mark.parametrize("token", ["S{}", "S{1,", "I[3..1]", "I'''[1..2]", "P(2,2)", "F()", "a b", "x{"])
def test_malformed_labels_rejected(token):
    with pytest.raises(LabelError):
        parse_label(token)


def test_label_normalisation():
    assert Subset((3, 1, 3)) == Subset((1, 3))
    assert Chord(5, 2) == Chord(2, 5)
    assert str(Flag((Subset((2,)), Subset((1,))))) == "F(S{1}|S{2})"
    # parts are sorted by rendering, so "," sorts before "}"
    assert str(parse_label("F(S{1}|S{1,2})")) == "F(S{1,2}|S{1})"
    assert len(Interval(2, 5)) == 4


def test_vertex_order_is_lexicographic_on_rendering():
    K = make_complex([[Subset((10,)), Subset((2,)), Subset((1,))]])
    assert [str(v) for v in K.vertices] == ["S{10}", "S{1}", "S{2}"]


# -- construction -----------------------------------------------------------------------


def test_make_complex_single_simplex():
    K = make_complex([["a", "b", "c"]])
    assert (len(K.facets), K.dim, K.n_vertices) == (1, 2, 3)


def test_make_complex_absorbs_subsumed_facets():
    K = make_complex([["a", "b"], ["b", "c"], ["a", "b", "c"]])
    assert K.labelled_facets() == [("a", "b", "c")]


def test_make_complex_disjoint_union():
    K = make_complex([["a", "b"], ["c", "d"]])
    assert K.dim == 1
    assert reduced_homology(K)[0].betti == 1  # two components


def test_make_complex_rejects_duplicates_and_empty():
    with pytest.raises(MalformedFacetError):
        make_complex([["a", "a", "b"]])
    with pytest.raises(MalformedFacetError):
        make_complex([[]])


def test_empty_and_point_complexes():
    E = make_complex([])
    assert E.dim == -1 and E.n_vertices == 0 and E.f_vector() == ()
    P = make_complex([["p"]])
    assert P.dim == 0 and P.f_vector() == (1,)


def test_downward_closure():
    K = make_complex([["a", "b", "c", "d"], ["d", "e"]])
    for f in K.facets:
        for r in range(1, len(f)):
            for g in itertools.combinations(f, r):
                assert K.has_simplex(g)
    assert not K.has_labelled_simplex(["a", "e"])


def test_flag_complex_matches_brute_force():
    verts = list(range(7))
    adj = lambda a, b: (a * b + a + b) % 3 != 0
    K = flag_complex(verts, adj)
    assert {frozenset(f) for f in K.labelled_facets()} == brute_flag_facets(verts, adj)


# -- span / skeleton / link -----------------------------------------------------------------------


def test_span_face_of_simplex():
    assert span(simplex("abc"), ["a", "b"]).labelled_facets() == [("a", "b")]


def test_span_all_vertices_is_identity():
    pent = associahedron_dual(4)
    assert span(pent, pent.vertices) == pent


def test_span_intervals_containing_two_is_a_cone():
    D5 = associahedron_dual(5)
    S = [t for t in D5.vertices if 2 in t.elems]
    sub = span(D5, S)
    # {2}, {1,2}, {2,3}, {1,2,3}, {2,3,4}; the whole path is not a tube
    assert sub.n_vertices == 5
    assert all(g.is_zero() for g in reduced_homology(sub).groups)


def test_span_unknown_vertex():
    with pytest.raises(UnknownVertexError):
        span(simplex("ab"), ["z"])


def test_skeleton_of_tetrahedron():
    B = skeleton(simplex("abcd"), 2)
    assert B.f_vector() == (4, 6, 4)
    assert len(B.facets) == 4


def test_skeleton_identity_and_errors():
    D5 = associahedron_dual(5)
    assert skeleton(D5, D5.dim) == D5
    with pytest.raises(ValueError):
        skeleton(D5, -1)


def test_skeleton_of_simplex_is_sphere():
    n = 6
    B = skeleton(simplex(range(n - 2)), n - 4)
    assert B.n_vertices == 4
    assert reduced_homology(B).is_sphere(2)


def test_link_in_boundary_of_tetrahedron():
    L = link(boundary_of_simplex("abcd"), "a")
    assert L == boundary_of_simplex("bcd")


def test_link_in_pentagon():
    D4 = tube_complex(path_graph(3))
    L = link(D4, Subset((2,)))
    assert L.dim == 0
    assert sorted(str(v) for v in L.vertices) == ["S{1,2}", "S{2,3}"]


def test_link_in_d5_is_a_sphere():
    D5 = associahedron_dual(5)
    L = link(D5, Subset((1, 2, 3)))
    assert reduced_homology(L).is_sphere(1)


def test_link_unknown_vertex():
    with pytest.raises(UnknownVertexError):
        link(simplex("ab"), "q")


def test_link_counts_match_star():
    D5 = associahedron_dual(5)
    for v in D5.vertices:
        L = link(D5, v)
        assert sum(L.f_vector()) == star_count(D5, v) - 1


# -- subdivision and euler characteristic -----------------------------------------------------------------


def test_bs_of_triangle_boundary_is_hexagon():
    bs, origin = barycentric_subdivision(boundary_of_simplex("abc"))
    assert bs.f_vector() == (6, 6)
    assert set(origin) == set(bs.vertices)


def test_bs_of_triangle():
    bs, _ = barycentric_subdivision(simplex("abc"))
    assert bs.f_vector() == (7, 12, 6)


def test_bs_preserves_euler_characteristic():
    D5 = associahedron_dual(5)
    bs, origin = barycentric_subdivision(D5)
    assert bs.n_vertices == sum(D5.f_vector())
    assert euler_characteristic(bs) == euler_characteristic(D5) == 2


def test_euler_characteristic_examples():
    assert euler_characteristic(boundary_of_simplex("abcd")) == 2
    assert euler_characteristic(associahedron_dual(4)) == 0
    D5 = associahedron_dual(5)
    assert D5.f_vector() == (9, 21, 14)


# -- vertex maps ------------------------------------------------------------------------------


def test_vertex_map_must_be_total_and_land_in_target():
    K = simplex("ab")
    with pytest.raises(UnknownVertexError):
        VertexMap(K, K, {"a": "a"})
    with pytest.raises(UnknownVertexError):
        VertexMap(K, K, {"a": "a", "b": "z"})


def test_identity_is_simplicial():
    D5 = associahedron_dual(5)
    f = identity_map(D5)
    assert is_simplicial(f) and is_injective_simplicial(f) and is_isomorphism(f)


def test_map_onto_adjacent_tubes_is_not_simplicial():
    K = tube_complex(path_graph(3))
    s1, s2, s3 = Subset((1,)), Subset((2,)), Subset((3,))
    mapping = {v: v for v in K.vertices}
    mapping[s3] = s2  # the edge {1},{3} lands on the adjacent pair {1},{2}
    assert not is_simplicial(VertexMap(K, K, mapping))


def test_constant_map_not_injective():
    K = simplex("abc")
    f = VertexMap(K, K, {v: "a" for v in K.vertices})
    assert is_simplicial(f)
    assert not is_injective_simplicial(f)


def test_find_isomorphism_examples():
    D5 = associahedron_dual(5)
    f = find_isomorphism(D5, D5)
    assert f is not None and f.is_identity()
    assert find_isomorphism(associahedron_dual(4), boundary_of_simplex("abc")) is None


def test_find_isomorphism_under_relabelling():
    D5 = associahedron_dual(5)
    names = {v: f"v{i}" for i, v in enumerate(reversed(D5.vertices))}
    K2 = make_complex([[names[v] for v in f] for f in D5.labelled_facets()])
    f = find_isomorphism(D5, K2)
    assert f is not None and is_isomorphism(f)
    assert D5.f_vector() == K2.f_vector()
    assert sorted(D5.degree(i) for i in range(9)) == sorted(K2.degree(i) for i in range(9))


def test_find_isomorphism_rejects_same_counts_different_shape():
    # hexagon vs two triangles: same f-vector, different complex
    hexagon = make_complex([[i, (i + 1) % 6] for i in range(6)])
    triangles = make_complex([[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]])
    assert hexagon.f_vector() == triangles.f_vector()
    assert find_isomorphism(hexagon, triangles) is None
