"""Graph representation, components and constructions"""

from .graph_core import (
    EdgeColouredGraph, VertexSet, GraphStats,
    GraphError, GraphFormatError, VertexRangeError, ColourCountError, SearchLimitError,
    RED, BLUE, YELLOW,
    load_graph, save_graph, to_text, from_text,
    min_degree, colour_degree, colour_neighbourhood,
    independence_number, maximum_independent_set, graph_stats
)
from .components import (
    Method, MonoComponent, MonoCover, MonoPartition, ComponentDecomposition,
    decompose, decompose_all, component_of, is_mono_connected
)
from .constructions import (
    ConstructionError, ConstructionSpec,
    build_cover_t_example, build_antipodal_example, random_dense_coloured,
    random_pocketed_coloured, random_offset_coloured, build
)

__all__ = [
    'EdgeColouredGraph', 'VertexSet', 'GraphStats',
    'GraphError', 'GraphFormatError', 'VertexRangeError', 'ColourCountError', 'SearchLimitError',
    'RED', 'BLUE', 'YELLOW',
    'load_graph', 'save_graph', 'to_text', 'from_text',
    'min_degree', 'colour_degree', 'colour_neighbourhood',
    'independence_number', 'maximum_independent_set', 'graph_stats',
    'Method', 'MonoComponent', 'MonoCover', 'MonoPartition', 'ComponentDecomposition',
    'decompose', 'decompose_all', 'component_of', 'is_mono_connected',
    'ConstructionError', 'ConstructionSpec',
    'build_cover_t_example', 'build_antipodal_example', 'random_dense_coloured',
    'random_pocketed_coloured', 'random_offset_coloured', 'build',
]
