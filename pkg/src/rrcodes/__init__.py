"""Repeated-root cyclic codes: distance bounds and burst-error decoding."""

from .bounds import (
    AssociatedCode,
    BoundWitness,
    ProductCode,
    bezout_pair,
    bound_I_search,
    bound_II_optima,
    bound_II_search,
    bound_III_search,
    product_defining_set,
    product_generator,
    product_witness,
    standard_candidates,
    verify_witness,
    zero_run,
)
from .channel import ExperimentConfig, burst_channel, run_experiment
from .code import DefiningSet, RepeatedRootCyclicCode, code_from_defining_set, fold, folded_code, unfold
from .decoder import DecoderReport, decode_alg1, decode_alg2, geea
from .field import Field, FieldElement, element_of_order, embed, field_create
from .oracle import OracleResult, classical_bch_decode, min_distance_exhaustive
from .poly import Polynomial, cyclotomic_coset, hasse_derivative, minimal_polynomial, root_multiplicity

__version__ = "0.1.0"

__all__ = [
    "AssociatedCode",
    "bezout_pair",
    "bound_I_search",
    "bound_II_optima",
    "bound_II_search",
    "bound_III_search",
    "BoundWitness",
    "burst_channel",
    "classical_bch_decode",
    "code_from_defining_set",
    "cyclotomic_coset",
    "decode_alg1",
    "decode_alg2",
    "DecoderReport",
    "DefiningSet",
    "element_of_order",
    "embed",
    "ExperimentConfig",
    "Field",
    "field_create",
    "FieldElement",
    "fold",
    "folded_code",
    "geea",
    "hasse_derivative",
    "min_distance_exhaustive",
    "minimal_polynomial",
    "OracleResult",
    "Polynomial",
    "product_defining_set",
    "product_generator",
    "product_witness",
    "ProductCode",
    "RepeatedRootCyclicCode",
    "root_multiplicity",
    "run_experiment",
    "standard_candidates",
    "unfold",
    "verify_witness",
    "zero_run",
]
