from ccrk.surfaces.intervals import (
    Component,
    as_tube,
    RhoReport,
    genus_rigid_set,
    interval_complex,
    interval_curve,
    intervals,
    intervals_compatible,
    leftmost_component,
    rho_map,
    sequential_components,
    sphere_rigid_set,
    subset_sphere,
    tau,
    verify_rho,
)
from ccrk.surfaces.nonrigid import (
    SYMMETRIES,
    IntersectionOracle,
    NonRigidityWitness,
    Status,
    Symmetry,
    build_oracle_g,
    build_oracle_g2n1,
    counterexample_g,
    counterexample_g2n1,
    sporadic_check,
    symmetry_action,
)
from ccrk.surfaces.polygon import (
    Theorem1Result,
    candidate_chord,
    chord_curve,
    chords,
    chords_cross,
    dihedral_image,
    polygon_model,
    theorem1_check,
)
