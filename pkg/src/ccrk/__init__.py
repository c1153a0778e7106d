"""Finite curve-complex spheres, associahedra and exact simplicial homology."""
from ccrk.complex import (
    SimplicialComplex,
    VertexMap,
    barycentric_subdivision,
    euler_characteristic,
    find_isomorphism,
    flag_complex,
    identity_map,
    is_injective_simplicial,
    is_isomorphism,
    is_simplicial,
    link,
    make_complex,
    skeleton,
    span,
)
from ccrk.homology import degree, fundamental_cycle, induced_chain_map, reduced_homology, smith_normal_form
from ccrk.tubings import associahedron_dual, enumerate_tubes, path_graph, tube_complex, tube_relation

__version__ = "0.1.0"
