"""De Bruijn sequences from LFSRs with characteristic polynomial ``p*q`` by cycle joining."""

from .cycles import (CycleId, ProductStructure, decompose_irreducible, decompose_product,
                     phi_map, sweep_cycles)
from .field import (INFINITY, FieldTable, build_tables, cyclotomic_number,
                    cyclotomic_t3_even, table_for)
from .graph import (AdjacencyGraph, TreeCount, best_count, build_adjacency, cofactor,
                    theorem6_count, theorem6_total)
from .joiner import (SpanningChoice, choice_from_states, enumerate_trees, feedback_anf,
                     format_anf, join, sample_trees, verify_debruijn)
from .lfsr import LfsrSpec, lfsr_next
from .pairs import (ConjugatePair, PairCountReport, PairFinder, count_closed_form,
                    count_e1_divides_e2, count_primitive_pair, find_conjugate_pairs,
                    subalgorithm, zech_subalg)
from .poly2 import Poly2, PolyClass, classify, is_irreducible, is_primitive, poly_order
from .staterep import StateBasis, ab_to_state, build_basis, locate_special, state_to_ab

__version__ = "0.1.0"

__all__ = [
    "INFINITY", "AdjacencyGraph", "ConjugatePair", "CycleId", "FieldTable", "LfsrSpec",
    "PairCountReport", "PairFinder", "Poly2", "PolyClass", "ProductStructure",
    "SpanningChoice", "StateBasis", "TreeCount", "ab_to_state", "best_count",
    "build_adjacency", "build_basis", "build_tables", "choice_from_states", "classify",
    "cofactor", "count_closed_form", "count_e1_divides_e2", "count_primitive_pair",
    "cyclotomic_number", "cyclotomic_t3_even", "decompose_irreducible", "decompose_product",
    "enumerate_trees", "feedback_anf", "find_conjugate_pairs", "format_anf",
    "is_irreducible", "is_primitive", "join", "lfsr_next", "locate_special", "phi_map",
    "poly_order", "sample_trees", "state_to_ab", "subalgorithm", "sweep_cycles",
    "table_for", "theorem6_count", "theorem6_total", "verify_debruijn", "zech_subalg",
]
