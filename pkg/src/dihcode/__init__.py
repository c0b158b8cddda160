"""Perfect codes in connected quartic Cayley graphs on generalized dihedral
groups: closed-form classification and enumeration, cross-validated against an
independent exact-cover oracle."""

from .abelian import AbelianSpec, SubgroupTable, all_log_pairs, min_power_in, subgroup_closure
from .cayley import CayleyGraph, build_graph, closed_neighborhood, export, graph_from_json, layers
from .classifier import ClassificationResult, case1_congruence, classify
from .enumerator import (
    all_perfect_codes,
    codes_containing_t,
    is_perfect_code,
    layer_invariant,
    reduce_case1,
    reference_reflection,
    reflection_gap_invariant,
    spacing_invariant,
    window_invariant,
)
from .gendihedral import (
    ConnectionSet,
    ConnectionSetError,
    GElem,
    g_inv,
    g_mul,
    parse_connection_set,
    parse_gelem,
    validate_connection_set,
)
from .oracle import BudgetExceededError, exists_code, find_all_codes, masks_from_graph

__all__ = [
    "AbelianSpec",
    "BudgetExceededError",
    "CayleyGraph",
    "ClassificationResult",
    "ConnectionSet",
    "ConnectionSetError",
    "GElem",
    "SubgroupTable",
    "all_log_pairs",
    "all_perfect_codes",
    "build_graph",
    "case1_congruence",
    "classify",
    "closed_neighborhood",
    "codes_containing_t",
    "exists_code",
    "export",
    "find_all_codes",
    "g_inv",
    "g_mul",
    "graph_from_json",
    "is_perfect_code",
    "layer_invariant",
    "layers",
    "masks_from_graph",
    "min_power_in",
    "parse_connection_set",
    "parse_gelem",
    "reduce_case1",
    "reference_reflection",
    "reflection_gap_invariant",
    "spacing_invariant",
    "subgroup_closure",
    "window_invariant",
    "validate_connection_set",
]
