"""Exact computation of iterated socles ``I : m^s`` for ideals primary to the origin."""

from .determinantal import (
    hb_delta,
    hb_delta_report,
    hb_psi,
    hb_psi_minors,
    verify_lower_minor_containment,
)
from .errors import AlgebraError, NotArtinianError, NotOriginPrimaryError, OutOfRangeError
from .groebner import (
    Ideal,
    Module,
    colength,
    ideal_equal,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    max_ideal_power,
    origin_primary_check,
    syzygies,
)
from .koszul import KoszulElement, koszul_cycle_generators, koszul_differential, nabla, nabla_tilde
from .matrices import PolyMatrix, det, maximal_minors, minors, signed_maximal_minors
from .problem import ParseError, ProblemFile, format_problem, parse_problem, read_problem
from .report import COMPUTED, ERROR, FAIL, PASS, Report
from .resolution import FreeComplex, minimal_free_resolution, minimal_generators, order_of_last_map
from .ring import Polynomial, a_degree_split, gen_derivative, variables
from .socle import (
    ci_socle,
    predicted_socle_dimension,
    socle_generators_formula,
    socle_oracle,
    socle_via_decomposition,
    verify_dimension,
    verify_reduction_one,
)

__version__ = "0.1.0"

__all__ = [
    "hb_delta",
    "hb_delta_report",
    "hb_psi",
    "hb_psi_minors",
    "verify_lower_minor_containment",
    "AlgebraError",
    "NotArtinianError",
    "NotOriginPrimaryError",
    "OutOfRangeError",
    "Ideal",
    "Module",
    "colength",
    "ideal_equal",
    "ideal_product",
    "ideal_quotient",
    "ideal_sum",
    "max_ideal_power",
    "origin_primary_check",
    "syzygies",
    "KoszulElement",
    "koszul_cycle_generators",
    "koszul_differential",
    "nabla",
    "nabla_tilde",
    "PolyMatrix",
    "det",
    "maximal_minors",
    "minors",
    "signed_maximal_minors",
    "ParseError",
    "ProblemFile",
    "format_problem",
    "parse_problem",
    "read_problem",
    "COMPUTED",
    "ERROR",
    "FAIL",
    "PASS",
    "Report",
    "FreeComplex",
    "minimal_free_resolution",
    "minimal_generators",
    "order_of_last_map",
    "Polynomial",
    "a_degree_split",
    "gen_derivative",
    "variables",
    "ci_socle",
    "predicted_socle_dimension",
    "socle_generators_formula",
    "socle_oracle",
    "socle_via_decomposition",
    "verify_dimension",
    "verify_reduction_one",
]
