"""Transcribed worked examples, used as fixed expected data by the verifier.

Tableaux are written in the compact row form accepted by
:func:`shiftedpr.tableaux.parse_compact` (rows separated by ``/``, primes as
apostrophes). Nothing here is computed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .tableaux import ShiftedTableau, SkewShiftedTableau, YoungTableau, parse_compact


def sh(text: str) -> ShiftedTableau:
    return parse_compact(text, shifted=True)


def yt(text: str) -> YoungTableau:
    return parse_compact(text, shifted=False)


@dataclass(frozen=True)
class Trace:
    word: tuple[int, ...]
    P: tuple[str, ...]
    Q: tuple[str, ...]
    descents: tuple[int, ...]
    peaks: tuple[int, ...]


TRACE_612543 = Trace(
    (6, 1, 2, 5, 4, 3),
    ("6", "1 6", "1 2 / 6", "1 2 5 / 6", "1 2 4 / 5 6", "1 2 3 6 / 4 5"),
    ("1", "1 2'", "1 2' / 3", "1 2' 4 / 3", "1 2' 4 / 3 5'", "1 2' 4 6' / 3 5'"),
    (1, 4, 5),
    (4,),
)

TRACE_236541 = Trace(
    (2, 3, 6, 5, 4, 1),
    ("2", "2 3", "2 3 6", "2 3 5 / 6", "2 3 4 / 5 6", "1 2 3 4 / 5 6"),
    ("1", "1 2", "1 2 3", "1 2 3 / 4", "1 2 3 / 4 5'", "1 2 3 6' / 4 5'"),
    (3, 4, 5),
    (3,),
)

# 12*123 and 12*213: each product term with its insertion tableau
LEFT_IDEAL_ROWS = {
    ((1, 2), (1, 2, 3)): (
        ("12345", "1 2 3 4 5"),
        ("13245", "1 2 4 5 / 3"),
        ("14235", "1 2 3 5 / 4"),
        ("15234", "1 2 3 4 / 5"),
        ("23145", "1 2 3 4 5"),
        ("24135", "1 2 3 5 / 4"),
        ("25134", "1 2 3 4 / 5"),
        ("34125", "1 2 4 5 / 3"),
        ("35124", "1 2 4 / 3 5"),
        ("45123", "1 2 3 / 4 5"),
    ),
    ((1, 2), (2, 1, 3)): (
        ("12435", "1 2 3 5 / 4"),
        ("13425", "1 2 4 5 / 3"),
        ("14325", "1 2 4 5 / 3"),
        ("15324", "1 2 4 / 3 5"),
        ("23415", "1 2 3 4 5"),
        ("24315", "1 2 3 5 / 4"),
        ("25314", "1 2 3 4 / 5"),
        ("34215", "1 2 3 4 5"),
        ("35214", "1 2 3 4 / 5"),
        ("45213", "1 2 3 5 / 4"),
    ),
}

# (T)_S concatenation display
CONCAT_T = "1 2 4 / 3"
CONCAT_S = SkewShiftedTableau((4, 3, 1), (3, 1), ((2,), (1, 4), (3,)))
CONCAT_RESULT = "1 2 4 6 / 3 5 8 / 7"

# marked-standard tableaux over a fixed T with a fixed descent set
DP_SHAPE = (4, 3, 2)
DP_T = "1 2 4 6 / 3 5 8 / 7 9"
DP_D = (2, 3, 5, 8)
DP_PEAK = (2, 4, 6, 8)
DP_HITS = (
    "1 2 4' 6' / 3 5 8 / 7 9",
    "1 2 4' 6' / 3 5' 8 / 7 9",
    "1 2 4' 6' / 3 5 8 / 7 9'",
    "1 2 4' 6' / 3 5' 8 / 7 9'",
)

# j is not a coalgebra map
J_T = "1 2 3 6 / 4 5 / 7"
J_INVERSE_WORD = (5, 1, 7, 2, 3, 6, 4)
J_P_OF_INVERSE = "1 2 3 4 / 5 6 / 7"
J_Q_OF_INVERSE = "1 2' 3 6 / 4 5 / 7"
J_W = (2, 4, 5, 7, 1, 6, 3)
J_SPLIT = 2
J_U = (2, 1)
J_V = (2, 3, 5, 4, 1)
J_P_V = "1 3 4 / 2 / 5"
J_T_PRIME = "1 2"
J_S = SkewShiftedTableau((4, 2, 1), (2,), ((1, 4), (2, 3), (5,)))
J_T_DOUBLE = "1 2 3 4 / 5"
J_FRAK_S = ("12354", "21354", "31254", "32154", "41253", "42153", "43152", "43251")

# notation example: a semistandard marked tableau (primed diagonal entry in row 2)
NOTATION_T = "1 3' 4' 4 / 3' 4 6 / 6"
NOTATION_READING = "6 3' 4 6 1 3' 4' 4"
NOTATION_WEIGHT = (1, 0, 2, 3, 0, 2)
NOTATION_ST = "1 2' 4' 6 / 3' 5 8 / 7"


def word(text: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in text)
