"""Exact computation with cover ideals of finite simple graphs: weighted
grading witnesses, fiber cone invariants, and the Freiman / linear-type
classification, plus closed-form checks for the parametric families."""

from __future__ import annotations

from .fiber import (
    FiberReport,
    JoinFreimanCheck,
    NotQuasiEquigeneratedError,
    PowerCount,
    ToricProfile,
    ToricRelation,
    analytic_spread,
    fiber_report,
    join_freiman_check,
    power_count_check,
    predicted_power_count,
    toric_profile,
    unique_set_vertices,
)
from .grading import (
    CirculantQuasiCheck,
    IndependenceTwoCheck,
    TreeQuasiCheck,
    WeightWitness,
    circulant_quasi_check,
    difference_matrix,
    independence_two_check,
    is_equigenerated,
    quasi_witness,
    tree_quasi_check,
)
from .graph import (
    Graph,
    IndependentSetFamily,
    banded_path,
    circulant,
    complete,
    count_independent_sets,
    cycle,
    edgeless,
    equivalent_pairs,
    every_internal_vertex_has_leaf,
    free_trees,
    from_edge_list,
    from_independent_sets,
    g_sub,
    h_family,
    independence_number,
    induced_subgraph,
    is_almost_complete,
    is_complete,
    is_isomorphic,
    is_tree,
    is_whiskering_of,
    join,
    linked_join,
    maximal_independent_sets,
    path,
    reduce,
    star,
    two_cliques,
    whisker,
)
from .ideal import (
    CapacityError,
    MonomialIdeal,
    cover_ideal,
    intersect,
    minimalize,
    monomial_str,
    mu_power,
    power,
    power_by_multisets,
    product,
    symbolic_power,
    unit_ideal,
    weighted_degree,
)
from .ratlin import RatMatrix, kernel_basis, positive_solution, rank

__version__ = "0.1.0"
