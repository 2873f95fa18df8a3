"""Twisted Alexander polynomials of rational and Montesinos links."""

from .engine import (
    TapResult,
    alexander_polynomial,
    compute_tap,
    divides,
    tap_degenerate,
    tap_denominator,
    tap_numerator,
    tap_three_strand_simplified,
)
from .laurent import LaurentPoly, VarContext, canonical_form, equiv
from .oracle import wada_invariant
from .representation import build_representation, propagate, verify_representation
from .rings import CyclotomicField, IntegerRing, PrimeField, RationalField
from .tangles import MontesinosSpec, RationalTangleSpec, parse_link, synthesize_diagram

__version__ = "0.1.0"

__all__ = [
    "CyclotomicField",
    "IntegerRing",
    "LaurentPoly",
    "MontesinosSpec",
    "PrimeField",
    "RationalField",
    "RationalTangleSpec",
    "TapResult",
    "VarContext",
    "alexander_polynomial",
    "build_representation",
    "canonical_form",
    "compute_tap",
    "divides",
    "equiv",
    "parse_link",
    "propagate",
    "synthesize_diagram",
    "tap_degenerate",
    "tap_denominator",
    "tap_numerator",
    "tap_three_strand_simplified",
    "verify_representation",
    "wada_invariant",
]
