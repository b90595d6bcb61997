"""Solvers module"""

from .koenig_cover import (
    BipartiteGraph, AuxBipartiteGraph, Matching, HCover, Side, MatchingNotMaximumError,
    build_auxiliary, max_matching, find_augmenting_path, koenig_vertex_cover,
    cover_two_coloured, degree_threshold, degree_floor, realise_bipartite
)
from .exact_search import (
    SearchLimits, ColouringMode, EnumerationStats,
    min_mono_cover, min_mono_partition, exists_two_partition, distinct_colour_cover,
    enumerate_colourings, enumerate_connected_sets
)
from .proof_guided import (
    HeuristicConfig, SplitState, ClaimReport, PreconditionError, CLAIM_IDS,
    smallest_component, build_dominating_star, extend_closure, choose_pivot,
    random_two_sided_split, heuristic_two_partition, run_partition_pipeline, PartitionAttempt,
    STAGES, triple_intersection_cover, large_component_finder,
    two_colour_distinct_cover, three_colour_distinct_cover,
    claim_predicate_probe
)

__all__ = [
    'BipartiteGraph', 'AuxBipartiteGraph', 'Matching', 'HCover', 'Side', 'MatchingNotMaximumError',
    'build_auxiliary', 'max_matching', 'find_augmenting_path', 'koenig_vertex_cover',
    'cover_two_coloured', 'degree_threshold', 'degree_floor', 'realise_bipartite',
    'SearchLimits', 'ColouringMode', 'EnumerationStats',
    'min_mono_cover', 'min_mono_partition', 'exists_two_partition', 'distinct_colour_cover',
    'enumerate_colourings', 'enumerate_connected_sets',
    'HeuristicConfig', 'SplitState', 'ClaimReport', 'PreconditionError', 'CLAIM_IDS',
    'smallest_component', 'build_dominating_star', 'extend_closure', 'choose_pivot',
    'random_two_sided_split', 'heuristic_two_partition', 'run_partition_pipeline', 'PartitionAttempt',
    'STAGES', 'triple_intersection_cover', 'large_component_finder',
    'two_colour_distinct_cover', 'three_colour_distinct_cover',
    'claim_predicate_probe',
]
