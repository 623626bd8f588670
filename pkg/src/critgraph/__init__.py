"""Parity-aware cycle counting and critical-graph bound verification."""

from .critical import (
    CriticalFamily,
    CriticalityCertificate,
    TwoCutSplit,
    chromatic_number,
    f_s_count,
    gallai_family,
    is_k_critical,
    two_cut_split,
)
from .cycles import (
    Cycle,
    CycleSet,
    PathSet,
    SimplePath,
    count_paths_by_parity,
    cycles_through_edge,
    cycles_through_vertex,
    enumerate_cycles,
    enumerate_cycles_reference,
    enumerate_paths,
    f_count,
    nonseparating_induced_odd_cycle,
)
from .decomp import (
    Block,
    BlockTree,
    EarDecomposition,
    block_path,
    block_tree,
    ear_decomposition,
    t_additivity_check,
)
from .generators import (
    CorpusSpec,
    apex_odd_filter,
    corpus,
    hajos_join,
    petersen,
    wheel,
)
from .graph import (
    Graph,
    SignedGraph,
    VertexCut,
    connectivity,
    is_bipartite_signed,
    t_value,
    two_cuts,
)
from .structure import (
    AnchoredInstance,
    GoodPair,
    StapleAssignment,
    basic_cycles,
    block_path_bound,
    build_anchored,
    good_pairs,
    staple_edges,
)
from .verify import CHECKS, CheckReport, run_check, sweep

__version__ = "0.1.0"

__all__ = [
    "AnchoredInstance",
    "Block",
    "BlockTree",
    "CHECKS",
    "CheckReport",
    "CorpusSpec",
    "CriticalFamily",
    "CriticalityCertificate",
    "Cycle",
    "CycleSet",
    "EarDecomposition",
    "GoodPair",
    "Graph",
    "PathSet",
    "SignedGraph",
    "SimplePath",
    "StapleAssignment",
    "TwoCutSplit",
    "VertexCut",
    "apex_odd_filter",
    "basic_cycles",
    "block_path",
    "block_path_bound",
    "block_tree",
    "build_anchored",
    "chromatic_number",
    "connectivity",
    "corpus",
    "count_paths_by_parity",
    "cycles_through_edge",
    "cycles_through_vertex",
    "ear_decomposition",
    "enumerate_cycles",
    "enumerate_cycles_reference",
    "enumerate_paths",
    "f_count",
    "f_s_count",
    "gallai_family",
    "good_pairs",
    "hajos_join",
    "is_bipartite_signed",
    "is_k_critical",
    "nonseparating_induced_odd_cycle",
    "petersen",
    "run_check",
    "staple_edges",
    "sweep",
    "t_additivity_check",
    "t_value",
    "two_cut_split",
    "two_cuts",
    "wheel",
]
