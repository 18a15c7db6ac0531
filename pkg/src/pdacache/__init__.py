"""Placement delivery arrays for centralized coded caching."""

from .caching_sim import (BroadcastMessage, Demand, FileLibrary, SimReport, UserCache,
                          decode, deliver, place, run_end_to_end, sweep_demands)
from .constructions import (Scheme1Params, Scheme2Params, ali_niesen, dualize, scheme1,
                            scheme2)
from .hypergraph import (PropertyWitness, TripartiteHypergraph, check_63_free, check_linear,
                         column_degrees, equivalence_check, hypergraph_to_pda,
                         pda_to_hypergraph)
from .oracles import check_blackburn, check_strong_coloring
from .pda_core import (STAR, Pda, PdaError, PdaParams, ValidationReport, Violation, params,
                       validate)
from .textfmt import parse_pda, serialize_pda

__all__ = [
    "STAR", "Pda", "PdaError", "PdaParams", "ValidationReport", "Violation", "params",
    "validate", "Scheme1Params", "Scheme2Params", "scheme1", "scheme2", "ali_niesen",
    "dualize", "TripartiteHypergraph", "PropertyWitness", "pda_to_hypergraph",
    "hypergraph_to_pda", "check_linear", "check_63_free", "column_degrees",
    "equivalence_check", "check_blackburn", "check_strong_coloring", "FileLibrary",
    "UserCache", "Demand", "BroadcastMessage", "SimReport", "place", "deliver", "decode",
    "run_end_to_end", "sweep_demands", "parse_pda", "serialize_pda",
]
