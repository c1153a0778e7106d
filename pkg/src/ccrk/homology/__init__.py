from ccrk.homology.chains import (
    ChainComplexZ,
    HomologyGroup,
    HomologyProfile,
    boundary_matrices,
    boundary_matrix,
    reduced_betti_mod2,
    reduced_betti_rational,
    reduced_homology,
)
from ccrk.homology.degree import (
    DegreeReport,
    FundamentalCycle,
    degree,
    degree_report,
    fundamental_cycle,
    induced_chain_map,
)
from ccrk.homology.snf import IntegerMatrix, SmithForm, rank_mod_p, rational_rank, smith_normal_form

__all__ = [
    "ChainComplexZ", "HomologyGroup", "HomologyProfile", "boundary_matrices", "boundary_matrix",
    "reduced_betti_mod2", "reduced_betti_rational", "reduced_homology", "DegreeReport",
    "FundamentalCycle", "degree", "degree_report", "fundamental_cycle", "induced_chain_map",
    "IntegerMatrix", "SmithForm", "rank_mod_p", "rational_rank", "smith_normal_form",
]
