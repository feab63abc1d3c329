"""Recognition of probe diamond-free graphs with verifiable certificates."""

from .aux_bipartite import AuxBipartite, PipelineError, build_aux, find_six_cycle
from .bench import BenchReport, BenchRow, run_bench
from .certificates import CertScore, build_certificate, cert_score, check_n_independent, detect_h4
from .complete_split import CompleteSplitPartition, csda, non_complete_split, stopped_bfs
from .generators import gnp, planted_no, planted_yes
from .graph import (
    ComponentView,
    Graph,
    GraphFormatError,
    OpCounts,
    format_graph,
    induced_ordered,
    induced_subgraph,
    is_diamond_free,
    neighborhood_components,
    parse_graph,
)
from .lucs import LucsViolation, Role, RoleState, assign_roles, conflict_certificate
from .oracle import OracleVerdict, enumerate_diamonds, oracle_completion, oracle_forbidden
from .recognizer import (
    Certificate,
    Negative,
    Positive,
    certificate_from_json,
    recognize,
    verify,
    verify_positive,
)
from .templates import TEMPLATES, Template, template, verify_negative

__all__ = [
    "AuxBipartite", "BenchReport", "BenchRow", "CertScore", "Certificate", "ComponentView",
    "CompleteSplitPartition", "Graph", "GraphFormatError", "LucsViolation", "Negative",
    "OpCounts", "OracleVerdict", "PipelineError", "Positive", "Role", "RoleState",
    "TEMPLATES", "Template", "assign_roles", "build_aux", "build_certificate", "cert_score",
    "certificate_from_json", "check_n_independent", "conflict_certificate", "csda",
    "detect_h4", "enumerate_diamonds", "find_six_cycle", "format_graph", "gnp",
    "induced_ordered", "induced_subgraph", "is_diamond_free", "neighborhood_components",
    "non_complete_split", "oracle_completion", "oracle_forbidden", "parse_graph",
    "planted_no", "planted_yes", "recognize", "run_bench", "stopped_bfs", "template",
    "verify", "verify_negative", "verify_positive",
]
