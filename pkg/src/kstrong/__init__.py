"""Saturation and extremal numbers for k-strongly connected digraphs."""

__version__ = "0.1.0"

from .connectivity import (
    Separation,
    SccDecomposition,
    kappa,
    local_connectivity,
    min_separation,
    min_separator,
    separation,
    strong_components,
)
from .constructions import (
    KTreePlan,
    KTreeStep,
    acyclic_tournament,
    du,
    is_directed_ctree,
    ktree,
    ktree_random,
)
from .detection import DetectionResult, contains_k_strong, contains_k_strong_bruteforce
from .digraph import Digraph, DigraphError, DigraphParseError, read_dg, write_dg
from .formulas import (
    bounds_report,
    conjecture_value,
    du_arc_count,
    free_bound,
    sat_value,
    refined_free_bound,
)
from .oracle import OracleResult, canonical_form, enumerate_digraphs, oracle_sat_ex
from .saturation import SaturationReport, is_saturated, saturate

__all__ = [
    "Digraph", "DigraphError", "DigraphParseError", "read_dg", "write_dg",
    "SccDecomposition", "Separation", "strong_components", "local_connectivity",
    "kappa", "min_separator", "separation", "min_separation",
    "DetectionResult", "contains_k_strong", "contains_k_strong_bruteforce",
    "SaturationReport", "is_saturated", "saturate",
    "KTreePlan", "KTreeStep", "ktree", "ktree_random", "du", "acyclic_tournament",
    "is_directed_ctree",
    "sat_value", "du_arc_count", "conjecture_value", "free_bound", "refined_free_bound",
    "bounds_report",
    "OracleResult", "enumerate_digraphs", "canonical_form", "oracle_sat_ex",
]
