"""Shifted Poirier-Reutenauer algebras.

Sagan-Worley insertion and shifted Knuth classes, the Malvenuto-Reutenauer
Hopf structures and their (shifted) plactic quotients, peak functions and
Schur P/Q-functions, and an exhaustive verifier for the identities linking them.
"""
from .combinat import DescentSet, PeakSet
from .config import CapExceeded, degree_cap
from .freemodule import LinComb
from .insertion import P_RS, P_SW, Q_SW, knuth_class, mixed, rectify, sagan_worley, schensted, shifted_knuth_class
from .tableaux import ShiftedTableau, SkewShiftedTableau, YoungTableau, compact, parse_compact, render
from .verify import VerifyConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "DescentSet",
    "LinComb",
    "P_RS",
    "P_SW",
    "PeakSet",
    "Q_SW",
    "ShiftedTableau",
    "SkewShiftedTableau",
    "VerifyConfig",
    "YoungTableau",
    "compact",
    "degree_cap",
    "knuth_class",
    "mixed",
    "parse_compact",
    "rectify",
    "render",
    "run_suite",
    "sagan_worley",
    "schensted",
    "shifted_knuth_class",
]
