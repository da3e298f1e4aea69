"""Exact invariants of 2-bridge links and lens spaces, and a sign-matrix
orderability checker for Heegaard-diagram presentations."""

from .exactmath import GaussLaurent, solve_rep
from .jones import (
    ConventionRecord,
    calibrate_conventions,
    frozen_convention,
    grading_set_from_jones,
    grading_set_skein,
    jones_bracket,
    verify_skeinproof,
)
from .lensfloer import d_invariant, d_values
from .rho import I_invariant, I_values, iota, rho
from .twobridge import TwoBridge, linking_number, normalize, signature

__version__ = "0.1.0"

__all__ = [
    "ConventionRecord",
    "GaussLaurent",
    "I_invariant",
    "I_values",
    "TwoBridge",
    "calibrate_conventions",
    "d_invariant",
    "d_values",
    "frozen_convention",
    "grading_set_from_jones",
    "grading_set_skein",
    "iota",
    "jones_bracket",
    "linking_number",
    "normalize",
    "rho",
    "signature",
    "solve_rep",
    "verify_skeinproof",
]
