"""Reachability, bidirectional paths and spanners in temporal graphs."""
from .bipath import (
    SENTINEL,
    BiPath,
    BipathResult,
    Triplet,
    TripletSet,
    add_with_elimination,
    build_bispanner,
    compute_bipaths,
    extend_triplet,
    is_bidirectionally_connected,
    reconstruct_bipath,
)
from .core import (
    NON_STRICT,
    STRICT,
    GraphClass,
    ParseError,
    Setting,
    TemporalGraph,
    classify,
    parse_temporal_graph,
    read_temporal_graph,
    serialize_temporal_graph,
    snapshot,
    to_dot,
    write_temporal_graph,
)
from .exact import (
    SizeGuardError,
    SpanningTreeResult,
    Verdict,
    critical_bispanner_edges,
    min_bispanner_bruteforce,
    tst_bruteforce,
    tst_simple,
)
from .reach import SOURCE, Journey, earliest_arrival, find_pivots, foremost_journey, is_temporally_connected
from .reductions import (
    CnfFormula,
    GadgetMeta,
    InstanceError,
    SetCoverInstance,
    parse_dimacs,
    parse_setcover,
    sat_bruteforce,
    sat_to_tst_gadget,
    setcover_bruteforce,
    setcover_to_kbs_gadget,
    verify_kbs_reduction,
    verify_tst_reduction,
)

__version__ = "0.1.0"
