"""Schensted and Sagan-Worley insertion, (shifted) Knuth classes, rectification.

The scalar functions here are the reference implementation and keep a full
trace. Exhaustive sweeps over S_n go through :func:`insertion_table`, which
runs the batch kernels in :mod:`shiftedpr._kernels` and converts their grids
back to tableau objects.
"""
from __future__ import annotations

from bisect import bisect_right
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

import numpy as np

from . import _kernels
from .config import check_cap
from .tableaux import ShiftedTableau, SkewShiftedTableau, YoungTableau, reading_word
from .words import Permutation, inverse, swap_first_two


@dataclass(frozen=True)
class TraceStep:
    letter: int
    box: tuple[int, int]
    non_schensted: bool
    P: ShiftedTableau
    Q: ShiftedTableau


@dataclass(frozen=True)
class InsertionResult:
    P: ShiftedTableau
    Q: ShiftedTableau
    trace: tuple[TraceStep, ...] = field(default=(), compare=False, repr=False)


def _sw_step(rows: list[list[int]], x: int) -> tuple[tuple[int, int], bool]:
    """Insert ``x`` into shifted ``rows`` in place; return (new box, non-Schensted?)."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return (r, r), False
        row = rows[r]
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return (r, r + j), False
        row[j], x = x, row[j]
        if j == 0:
            break
        r += 1
    # the bumped letter left the diagonal cell (r, r): column insertions from column r + 1
    c = r + 1
    while True:
        i = 0
        while i < len(rows) and i <= c and i + len(rows[i]) > c and rows[i][c - i] < x:
            i += 1
        if i < len(rows) and i <= c and i + len(rows[i]) > c:
            rows[i][c - i], x = x, rows[i][c - i]
            c += 1
            continue
        if i == len(rows):
            if i != c:
                raise AssertionError(f"column {c} cannot grow into new row {i}")
            rows.append([x])
        else:
            if i + len(rows[i]) != c:
                raise AssertionError(f"cell ({i},{c}) is not addable")
            rows[i].append(x)
        return (i, c), True


def _check_distinct(w):
    if len(set(w)) != len(w) or any(v < 1 for v in w):
        raise ValueError(f"insertion needs distinct positive letters, got {tuple(w)}")


def sagan_worley(w: Sequence[int], keep_trace: bool = True) -> InsertionResult:
    """Shifted Schensted (Sagan-Worley) insertion of a word with distinct letters."""
    _check_distinct(w)
    rows: list[list[int]] = []
    qrows: list[list[int]] = []
    trace = []
    for step, x in enumerate(w, 1):
        (r, c), non_sch = _sw_step(rows, x)
        if r == len(qrows):
            qrows.append([])
        if c - r != len(qrows[r]):
            raise AssertionError("recording tableau out of sync")
        qrows[r].append(-step if non_sch else step)
        if keep_trace:
            trace.append(TraceStep(x, (r, c), non_sch, ShiftedTableau(rows), ShiftedTableau(qrows)))
    return InsertionResult(ShiftedTableau(rows), ShiftedTableau(qrows), tuple(trace))


def P_SW(w: Sequence[int]) -> ShiftedTableau:
    return sagan_worley(w, keep_trace=False).P


def Q_SW(w: Sequence[int]) -> ShiftedTableau:
    return sagan_worley(w, keep_trace=False).Q


def schensted(w: Sequence[int]) -> tuple[YoungTableau, YoungTableau]:
    _check_distinct(w)
    rows: list[list[int]] = []
    qrows: list[list[int]] = []
    for step, x in enumerate(w, 1):
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                qrows.append([step])
                break
            j = bisect_right(rows[r], x)
            if j == len(rows[r]):
                rows[r].append(x)
                qrows[r].append(step)
                break
            rows[r][j], x = x, rows[r][j]
            r += 1
    return YoungTableau(rows), YoungTableau(qrows)


def P_RS(w: Sequence[int]) -> YoungTableau:
    return schensted(w)[0]


def mixed(w: Permutation) -> tuple[ShiftedTableau, ShiftedTableau]:
    """Haiman's mixed insertion pair, obtained from its duality with Sagan-Worley."""
    res = sagan_worley(inverse(w), keep_trace=False)
    return res.Q, res.P


def knuth_neighbors(w: Sequence[int]) -> set[tuple[int, ...]]:
    """One elementary Knuth move xzy~zxy, yxz~yzx (x<y<z) at any window."""
    w = tuple(w)
    out = set()
    for i in range(len(w) - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        # xzy <-> zxy: the last letter is the middle value, the first two swap
        if min(a, b) < c < max(a, b):
            out.add(w[:i] + (b, a, c) + w[i + 3:])
        # yxz <-> yzx: the first letter is the middle value, the last two swap
        if min(b, c) < a < max(b, c):
            out.add(w[:i] + (a, c, b) + w[i + 3:])
    return out


def shifted_knuth_neighbors(w: Sequence[int]) -> set[tuple[int, ...]]:
    out = knuth_neighbors(w)
    if len(w) >= 2:
        out.add(swap_first_two(w))
    return out


def _closure(w, step, cap):
    w = tuple(w)
    check_cap(len(w), cap)
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for v in step(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def knuth_class(w: Sequence[int], cap: int | None = None) -> set[tuple[int, ...]]:
    return _closure(w, knuth_neighbors, cap)


def shifted_knuth_class(w: Sequence[int], cap: int | None = None) -> set[tuple[int, ...]]:
    return _closure(w, shifted_knuth_neighbors, cap)


def rectify(S: SkewShiftedTableau | ShiftedTableau) -> ShiftedTableau:
    """Rectification of a standard skew shifted tableau, via P_SW of its reading word."""
    return P_SW(reading_word(S))


# --- batch tables --------------------------------------------------------------


def permutation_array(n: int, cap: int | None = None) -> np.ndarray:
    check_cap(n, cap)
    if n == 0:
        return np.zeros((1, 0), np.int8)
    return np.array(list(permutations(range(1, n + 1))), dtype=np.int8)


def grid_to_shifted(grid: np.ndarray) -> ShiftedTableau:
    rows = []
    for r in range(grid.shape[0]):
        row = tuple(int(e) for e in grid[r, r:] if e != 0)
        if not row:
            break
        rows.append(row)
    return ShiftedTableau(rows)


def grid_to_young(grid: np.ndarray) -> YoungTableau:
    rows = []
    for r in range(grid.shape[0]):
        row = tuple(int(e) for e in grid[r] if e != 0)
        if not row:
            break
        rows.append(row)
    return YoungTableau(rows)


def _interned(grids: np.ndarray, convert):
    """Convert grids to tableaux, building each distinct tableau once."""
    n = grids.shape[0]
    flat = np.ascontiguousarray(grids.reshape(n, -1))
    keys = flat.view(np.dtype((np.void, flat.shape[1]))).ravel()
    uniq, first, inv = np.unique(keys, return_index=True, return_inverse=True)
    objs = [convert(grids[i]) for i in first]
    return [objs[i] for i in inv.ravel()]


@dataclass
class InsertionTable:
    """Sagan-Worley and Schensted data for every permutation of S_n (lex order)."""

    n: int
    perms: list[Permutation]
    sw_P: list[ShiftedTableau]
    sw_Q: list[ShiftedTableau]
    rs_P: list[YoungTableau]
    rs_Q: list[YoungTableau]
    index: dict[Permutation, int]

    def sw_fibers(self) -> dict[ShiftedTableau, list[Permutation]]:
        out: dict[ShiftedTableau, list[Permutation]] = {}
        for w, T in zip(self.perms, self.sw_P):
            out.setdefault(T, []).append(w)
        return out

    def rs_fibers(self) -> dict[YoungTableau, list[Permutation]]:
        out: dict[YoungTableau, list[Permutation]] = {}
        for w, T in zip(self.perms, self.rs_P):
            out.setdefault(T, []).append(w)
        return out

    def P_SW(self, w) -> ShiftedTableau:
        return self.sw_P[self.index[tuple(w)]]

    def Q_SW(self, w) -> ShiftedTableau:
        return self.sw_Q[self.index[tuple(w)]]

    def P_RS(self, w) -> YoungTableau:
        return self.rs_P[self.index[tuple(w)]]


@lru_cache(maxsize=None)
def insertion_table(n: int) -> InsertionTable:
    arr = permutation_array(n)
    if n == 0:
        e = ShiftedTableau(), YoungTableau()
        return InsertionTable(0, [()], [e[0]], [e[0]], [e[1]], [e[1]], {(): 0})
    P, Q = _kernels.sw_insert_batch(arr)
    RP, RQ = _kernels.rs_insert_batch(arr)
    perms = [tuple(int(v) for v in row) for row in arr]
    return InsertionTable(
        n,
        perms,
        _interned(P, grid_to_shifted),
        _interned(Q, grid_to_shifted),
        _interned(RP, grid_to_young),
        _interned(RQ, grid_to_young),
        {w: i for i, w in enumerate(perms)},
    )


@lru_cache(maxsize=None)
def sw_fibers(n: int) -> dict[ShiftedTableau, tuple[Permutation, ...]]:
    return {T: tuple(ws) for T, ws in insertion_table(n).sw_fibers().items()}


@lru_cache(maxsize=None)
def rs_fibers(n: int) -> dict[YoungTableau, tuple[Permutation, ...]]:
    return {T: tuple(ws) for T, ws in insertion_table(n).rs_fibers().items()}


def cached_P_SW(w: Sequence[int]) -> ShiftedTableau:
    """P_SW through the per-degree table when the degree is small, else direct."""
    n = len(w)
    if n <= 8 and sorted(w) == list(range(1, n + 1)):
        return insertion_table(n).P_SW(w)
    return P_SW(w)


def cached_P_RS(w: Sequence[int]) -> YoungTableau:
    n = len(w)
    if n <= 8 and sorted(w) == list(range(1, n + 1)):
        return insertion_table(n).P_RS(w)
    return P_RS(w)
