"""Count the elements of a Coxeter group that have a unique reduced expression."""

from .graph import (
    INF,
    ContainsCycle,
    CoxeterGraph,
    Generator,
    GraphError,
    InfiniteBond,
    InfiniteType,
    MultipleHighEdges,
    SimplyLacedTree,
    SingleHighEdgeTree,
    classify_component,
    connected_components,
    find_chain,
    format_graph,
    parse_graph,
    tree_split_sizes,
)
from .counting import (
    FinitenessReport,
    Infinite,
    chain_count_long,
    chain_count_total,
    finiteness,
    u_component,
    u_graph,
    u_simply_laced_tree,
    u_single_high_edge,
)
from .oracle import (
    Automaton,
    WitnessPattern,
    build_automaton,
    enumerate_unique_words,
    infinite_witness,
    is_unique_reduced_word,
    oracle_count,
)
from .catalog import FamilyName, family_graph, parse_family, standard_graph

__version__ = "0.1.0"
