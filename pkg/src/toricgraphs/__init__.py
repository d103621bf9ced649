"""Exact toric ideals of finite simple graphs.

Builds the toric ideal of a graph over the rationals, enumerates all of
its reduced Groebner bases by Groebner-fan traversal, computes minimal
generators through fiber graphs, and decides minimal-generation
properties (MG / UMG / robust / generalized robust) together with the
clique-sum structure of the graph.
"""

__version__ = "0.1.0"

from .binomials import Binomial, GroebnerBasis, buchberger, normal_form, s_pair
from .classify import (
    Budget,
    ClassificationReport,
    DecompositionTree,
    classify,
    is_complete_intersection_bipartite,
    is_generalized_robust,
    is_mg,
    is_ring_graph,
    is_robust,
    is_umg,
    odd_cycle_decompose,
    theta_decompose,
)
from .fan import enumerate_reduced_gbs, flip, gb_size_range, groebner_cone, universal_gb
from .graphs import (
    Graph,
    Walk,
    biconnected_blocks,
    build_graph,
    classify_chords,
    clique_sum,
    enumerate_chordless_cycles,
    enumerate_cycles,
    enumerate_even_closed_walks,
    induced_subgraph,
    is_bipartite,
    is_chordless_graph,
    theta_graph,
)
from .ideals import (
    GraphIdeal,
    incidence_matrix,
    minimality_screen,
    markov_basis_bipartite,
    toric_ideal,
    universal_gb_bipartite,
    universal_markov_basis,
    walk_binomial,
)
from .lattice import (
    GradingMatrix,
    fiber,
    integer_kernel,
    is_minimal_binomial,
    lattice_ideal_generators,
    minimal_generators,
    saturate,
)
from .orders import MonomialOrder, compare, degrevlex, lex, stacked_order, weight_order

__all__ = [name for name in dir() if not name.startswith("_")]
