"""Exact computations for continuous orbit equivalence of one-sided topological Markov shifts."""

__version__ = "0.1.0"

from .coe import CoeSpec, Transducer, apply_transducer, psi_h, verify_coe, xi_h
from .cylfn import CylFn, classes_equal, coboundary_witness, is_order_unit, is_positive_class, min_cycle_mean
from .errors import MarkovCoeError, SchemaError, ValidationError
from .measures import MarkovMeasure, markov_measure, parry_measure, pushforward
from .shift import EvPeriodicPoint, Orbit, ShiftSpace, normalize_evp, validate_matrix
from .transfer import psi_transfer, psi_transfer_inv
from .zeta import char_reciprocal, weighted_zeta, zeta_exp_trace, zeta_series

__all__ = [
    "CoeSpec", "Transducer", "apply_transducer", "psi_h", "verify_coe", "xi_h",
    "CylFn", "classes_equal", "coboundary_witness", "is_order_unit", "is_positive_class", "min_cycle_mean",
    "MarkovCoeError", "SchemaError", "ValidationError",
    "MarkovMeasure", "markov_measure", "parry_measure", "pushforward",
    "EvPeriodicPoint", "Orbit", "ShiftSpace", "normalize_evp", "validate_matrix",
    "psi_transfer", "psi_transfer_inv",
    "char_reciprocal", "weighted_zeta", "zeta_exp_trace", "zeta_series",
]
