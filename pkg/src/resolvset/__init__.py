"""Exact resolving-set dimensions for hollow coronoid and starphene graphs."""

from .audit import AuditReport, AuditRow, audit_hc, audit_sp, fixture_check_hc444, load_fixture
from .generators import HcParams, SpParams, build_hc, build_sp, hc_profile, sp_profile, validate_structure
from .graph import (
    Edge,
    Family,
    GraphError,
    LabeledGraph,
    VertexLabel,
    all_pairs_distances,
    distance_vertex_edge,
    graph_from_edges,
    parse_edgelist,
    to_dot,
    to_edgelist,
)
from .resolvability import (
    DimensionResult,
    SearchBudgetExceeded,
    Variant,
    code,
    is_independent,
    is_resolving,
    min_dimension,
    multiset_rep,
    refute_all,
)

__version__ = "0.1.0"
