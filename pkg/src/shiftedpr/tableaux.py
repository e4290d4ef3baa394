"""Shifted and unshifted tableaux with marked entries.

Entries are ints; a primed letter k' is stored as -k. The total order
1' < 1 < 2' < 2 < ... is realised by :func:`rank` (2k - 1 for k', 2k for k),
so comparisons never branch on the mark.

Row ``r`` (0-based) of a shifted tableau starts in column ``r``; the main
diagonal is the set of cells with ``column == row``. Unshifted tableaux start
every row in column 0.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .combinat import DescentSet, PeakSet, is_partition, peak_set
from .config import check_cap


def rank(e: int) -> int:
    return 2 * e if e > 0 else -2 * e - 1


def marked(value: int, primed: bool = False) -> int:
    if value < 1:
        raise ValueError("letters are positive")
    return -value if primed else value


def letter_str(e: int) -> str:
    return f"{-e}'" if e < 0 else str(e)


def _freeze(rows) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(e) for e in row) for row in rows)
    while rows and not rows[-1]:
        rows = rows[:-1]
    return rows


@dataclass(frozen=True, order=True)
class ShiftedTableau:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", _freeze(self.rows))

    shifted = True

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __len__(self):
        return self.size

    def offset(self, r: int) -> int:
        return r

    def cells(self):
        for r, row in enumerate(self.rows):
            for j, e in enumerate(row):
                yield r, r + j, e

    def entry(self, r: int, c: int) -> int:
        return self.rows[r][c - r]

    def __str__(self):
        return render(self)


@dataclass(frozen=True, order=True)
class YoungTableau:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", _freeze(self.rows))

    shifted = False

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __len__(self):
        return self.size

    def offset(self, r: int) -> int:
        return 0

    def cells(self):
        for r, row in enumerate(self.rows):
            for c, e in enumerate(row):
                yield r, c, e

    def entry(self, r: int, c: int) -> int:
        return self.rows[r][c]

    def __str__(self):
        return render(self)


@dataclass(frozen=True, order=True)
class SkewShiftedTableau:
    """Standard filling of a skew shifted shape outer/inner.

    ``rows[r]`` lists the entries of row ``r`` that lie outside ``inner``,
    i.e. columns ``r + inner[r]`` through ``r + outer[r] - 1``.
    """

    outer: tuple[int, ...]
    inner: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        outer = tuple(self.outer)
        inner = tuple(x for x in self.inner if x)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        rows = tuple(tuple(r) for r in self.rows)
        rows = rows + ((),) * (len(outer) - len(rows))
        object.__setattr__(self, "rows", rows)
        if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
            raise ValueError(f"inner shape {inner} not contained in {outer}")
        for r, row in enumerate(rows):
            if len(row) != outer[r] - self.inner_part(r):
                raise ValueError(f"row {r} has {len(row)} cells, expected {outer[r] - self.inner_part(r)}")

    shifted = True

    def inner_part(self, r: int) -> int:
        return self.inner[r] if r < len(self.inner) else 0

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __len__(self):
        return self.size

    def cells(self):
        for r, row in enumerate(self.rows):
            start = r + self.inner_part(r)
            for j, e in enumerate(row):
                yield r, start + j, e

    def __str__(self):
        return render(self)


AnyTableau = ShiftedTableau | YoungTableau | SkewShiftedTableau


def _grid(T) -> dict[tuple[int, int], int]:
    return {(r, c): e for r, c, e in T.cells()}


def validate(T, diagonal_primes: bool = False) -> tuple[bool, str | None]:
    """Check the marked-tableau rules; returns (ok, first violation).

    ``diagonal_primes=True`` drops the diagonal rule, which gives the
    tableaux counted by Q-functions rather than P-functions.
    """
    shape = T.outer if isinstance(T, SkewShiftedTableau) else T.shape
    if T.shifted and not is_partition(shape, strict=True):
        return False, f"shape {shape} is not a strict partition"
    if not T.shifted and not is_partition(shape):
        return False, f"shape {shape} is not a partition"
    if isinstance(T, SkewShiftedTableau) and not is_partition(T.inner, strict=True):
        return False, f"inner shape {T.inner} is not a strict partition"
    grid = _grid(T)
    for (r, c), e in sorted(grid.items()):
        if e == 0:
            return False, f"empty letter at cell ({r},{c})"
        if T.shifted and not diagonal_primes and c == r and e < 0:
            return False, f"no primed entries on the main diagonal: {letter_str(e)} at ({r},{c})"
        left = grid.get((r, c - 1))
        if left is not None:
            if rank(left) > rank(e):
                return False, f"row not weakly increasing at ({r},{c})"
            if left == e and e < 0:
                return False, f"primed {letter_str(e)} repeated in row {r} at ({r},{c})"
        up = grid.get((r - 1, c))
        if up is not None:
            if rank(up) > rank(e):
                return False, f"column not weakly increasing at ({r},{c})"
            if up == e and e > 0:
                return False, f"unprimed {e} repeated in column {c} at ({r},{c})"
    return True, None


def is_standard(T, allow_marks: bool = False) -> bool:
    ok, _ = validate(T)
    if not ok:
        return False
    vals = sorted(abs(e) for _, _, e in T.cells())
    if vals != list(range(1, len(vals) + 1)):
        return False
    return allow_marks or all(e > 0 for _, _, e in T.cells())


def reading_word(T) -> tuple[int, ...]:
    """Rows read from bottom to top, each left to right."""
    return tuple(e for row in reversed(T.rows) for e in row)


def weight(T) -> tuple[int, ...]:
    vals = [abs(e) for _, _, e in T.cells()]
    if not vals:
        return ()
    out = [0] * max(vals)
    for v in vals:
        out[v - 1] += 1
    return tuple(out)


def unmark(T):
    rows = tuple(tuple(abs(e) for e in row) for row in T.rows)
    if isinstance(T, SkewShiftedTableau):
        return SkewShiftedTableau(T.outer, T.inner, rows)
    return type(T)(rows)


def standardize_marked(T):
    """Renumber entries 1..n along the order of X'.

    Equal unprimed letters form a horizontal strip and are numbered left to
    right; equal primed letters form a vertical strip and are numbered top to
    bottom. Marks are kept.
    """
    cells = list(T.cells())
    order = sorted(cells, key=lambda rce: (rank(rce[2]), rce[1] if rce[2] > 0 else rce[0]))
    new = {}
    for k, (r, c, e) in enumerate(order, 1):
        new[(r, c)] = -k if e < 0 else k
    rows = []
    for r, row in enumerate(T.rows):
        start = T.offset(r) if not isinstance(T, SkewShiftedTableau) else r + T.inner_part(r)
        rows.append(tuple(new[(r, start + j)] for j in range(len(row))))
    if isinstance(T, SkewShiftedTableau):
        return SkewShiftedTableau(T.outer, T.inner, rows)
    return type(T)(rows)


def _positions(T) -> dict[int, tuple[int, bool]]:
    return {abs(e): (r, e < 0) for r, _, e in T.cells()}


def descent_set_tableau(T) -> DescentSet:
    """Descent set of a standard or marked-standard tableau (shifted or not).

    i is a descent when i is unprimed and sits strictly above i+1 or (i+1)',
    or when (i+1)' sits weakly above i or i'. With i unprimed and i+1 primed
    one of the two always applies; with i primed and i+1 unprimed neither does.
    """
    pos = _positions(T)
    n = len(pos)
    des = []
    for i in range(1, n):
        ri, pi = pos[i]
        rj, pj = pos[i + 1]
        if not pi and ri < rj:
            des.append(i)
        elif pj and rj <= ri:
            des.append(i)
    return DescentSet(n, tuple(des))


descent_set_shifted = descent_set_tableau


def peak_set_tableau(T) -> PeakSet:
    return peak_set(descent_set_tableau(T))


peak_set_shifted = peak_set_tableau


def composition_of_tableau(T) -> tuple[int, ...]:
    from .combinat import composition_of_subset

    return composition_of_subset(descent_set_tableau(T))


def concat_after_shift(T: ShiftedTableau, S: SkewShiftedTableau) -> ShiftedTableau:
    """The tableau (T)_S: entries of S raised by |T| and laid over outer/inner."""
    inner = T.shape
    if tuple(S.inner) != tuple(inner):
        raise ValueError(f"shape mismatch: S has inner {S.inner}, T has shape {inner}")
    n = T.size
    rows = []
    for r in range(len(S.outer)):
        head = T.rows[r] if r < len(T.rows) else ()
        rows.append(head + tuple(e + n if e > 0 else e - n for e in S.rows[r]))
    return ShiftedTableau(rows)


def decompose_prefix(T: ShiftedTableau, k: int) -> tuple[ShiftedTableau, SkewShiftedTableau]:
    """Split a standard shifted T into (cells <= k, rest lowered by k)."""
    if not 0 <= k <= T.size:
        raise ValueError(f"k={k} outside [0, {T.size}]")
    head = ShiftedTableau(tuple(tuple(e for e in row if e <= k) for row in T.rows))
    tail_rows = tuple(tuple(e - k for e in row if e > k) for row in T.rows)
    return head, SkewShiftedTableau(T.shape, head.shape, tail_rows)


def skew_from_shifted(T: ShiftedTableau) -> SkewShiftedTableau:
    return SkewShiftedTableau(T.shape, (), T.rows)


def row_tableau(lam: tuple[int, ...]) -> ShiftedTableau:
    """The shifted standard tableau filled row by row with 1..n (written T_lambda)."""
    rows, k = [], 1
    for part in lam:
        rows.append(tuple(range(k, k + part)))
        k += part
    return ShiftedTableau(rows)


# --- enumeration -----------------------------------------------------------


def _removable_rows(shape: tuple[int, ...], shifted: bool) -> list[int]:
    out = []
    for r, part in enumerate(shape):
        nxt = shape[r + 1] if r + 1 < len(shape) else 0
        if shifted:
            if r + 1 == len(shape) or part - 1 > nxt:
                out.append(r)
        elif part > nxt:
            out.append(r)
    return out


def _drop(shape, r):
    s = list(shape)
    s[r] -= 1
    while s and s[-1] == 0:
        s.pop()
    return tuple(s)


@lru_cache(maxsize=None)
def _standard_fillings(shape: tuple[int, ...], shifted: bool) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []
    for r in _removable_rows(shape, shifted):
        smaller = _drop(shape, r)
        for rows in _standard_fillings(smaller, shifted):
            rows = list(rows) + [()] * (len(shape) - len(rows))
            rows[r] = rows[r] + (n,)
            out.append(tuple(rows))
    out.sort()
    return tuple(out)


def _require_shape(lam, strict):
    lam = tuple(lam)
    if not is_partition(lam, strict=strict):
        raise ValueError(f"{lam} is not a {'strict ' if strict else ''}partition")
    check_cap(sum(lam))
    return lam


def enumerate_ShSYT(lam) -> list[ShiftedTableau]:
    lam = _require_shape(lam, True)
    return [ShiftedTableau(rows) for rows in _standard_fillings(lam, True)]


def enumerate_SYT(lam) -> list[YoungTableau]:
    lam = _require_shape(lam, False)
    return [YoungTableau(rows) for rows in _standard_fillings(lam, False)]


def markings(T, off_diagonal_only: bool | None = None):
    """All ways to prime entries of an unmarked standard tableau."""
    if off_diagonal_only is None:
        off_diagonal_only = T.shifted
    cells = list(T.cells())
    free = [i for i, (r, c, _) in enumerate(cells) if not (off_diagonal_only and r == c)]
    for bits in product((False, True), repeat=len(free)):
        flags = dict(zip(free, bits))
        vals = {(r, c): (-e if flags.get(i) else e) for i, (r, c, e) in enumerate(cells)}
        rows = tuple(tuple(vals[(r, T.offset(r) + j)] for j in range(len(row))) for r, row in enumerate(T.rows))
        yield type(T)(rows)


def enumerate_ShSYT_pm(lam) -> list[ShiftedTableau]:
    return [S for T in enumerate_ShSYT(lam) for S in markings(T)]


def enumerate_SYT_pm(lam) -> list[YoungTableau]:
    return [S for T in enumerate_SYT(lam) for S in markings(T)]


def _semistandard(lam, max_value, shifted, marked_letters):
    cells = [(r, (r if shifted else 0) + j) for r, part in enumerate(lam) for j in range(part)]
    if marked_letters:
        letters = [e for v in range(1, max_value + 1) for e in (-v, v)]
    else:
        letters = list(range(1, max_value + 1))
    grid: dict[tuple[int, int], int] = {}
    out = []

    def ok(r, c, e):
        if shifted and r == c and e < 0:
            return False
        left = grid.get((r, c - 1))
        if left is not None:
            if rank(left) > rank(e) or (left == e and e < 0):
                return False
            if not marked_letters and left > e:
                return False
        up = grid.get((r - 1, c))
        if up is not None:
            if marked_letters:
                if rank(up) > rank(e) or (up == e and e > 0):
                    return False
            elif up >= e:
                return False
        return True

    def rec(i):
        if i == len(cells):
            rows, k = [], 0
            for part in lam:
                rows.append(tuple(grid[cells[k + j]] for j in range(part)))
                k += part
            out.append(rows)
            return
        r, c = cells[i]
        for e in letters:
            if ok(r, c, e):
                grid[(r, c)] = e
                rec(i + 1)
                del grid[(r, c)]

    rec(0)
    return out


def enumerate_ShSSYT_pm(lam, max_value: int) -> list[ShiftedTableau]:
    lam = _require_shape(lam, True)
    return [ShiftedTableau(rows) for rows in _semistandard(lam, max_value, True, True)]


def enumerate_SSYT_pm(lam, max_value: int) -> list[YoungTableau]:
    lam = _require_shape(lam, False)
    return [YoungTableau(rows) for rows in _semistandard(lam, max_value, False, True)]


def enumerate_SSYT(lam, max_value: int) -> list[YoungTableau]:
    lam = _require_shape(lam, False)
    return [YoungTableau(rows) for rows in _semistandard(lam, max_value, False, False)]


def _contains(outer, inner):
    return len(inner) <= len(outer) and all(m <= l for m, l in zip(inner, outer))


@lru_cache(maxsize=None)
def _skew_fillings(outer, inner):
    m = sum(outer) - sum(inner)
    if m == 0:
        return ((),) if outer == inner else ()
    out = []
    for r in _removable_rows(outer, True):
        smaller = _drop(outer, r)
        if not _contains(smaller, inner):
            continue
        for rows in _skew_fillings(smaller, inner):
            rows = list(rows) + [()] * (len(outer) - len(rows))
            rows[r] = rows[r] + (m,)
            out.append(tuple(rows))
    out.sort()
    return tuple(out)


def enumerate_skew_ShSYT(outer, inner) -> list[SkewShiftedTableau]:
    outer = _require_shape(outer, True)
    inner = tuple(inner)
    if not is_partition(inner, strict=True) or not _contains(outer, inner):
        raise ValueError(f"{inner} is not a strict partition inside {outer}")
    return [SkewShiftedTableau(outer, inner, rows) for rows in _skew_fillings(outer, inner)]


def strict_supersets(inner, k: int) -> list[tuple[int, ...]]:
    """Strict partitions nu containing ``inner`` with |nu| = |inner| + k."""
    from .combinat import enumerate_partitions

    return [nu for nu in enumerate_partitions(sum(inner) + k, strict=True) if _contains(nu, tuple(inner))]


# --- I/O ---------------------------------------------------------------------


def render(T) -> str:
    cells = list(T.cells())
    if not cells:
        return "(empty)"
    width = max(len(letter_str(e)) for _, _, e in cells)
    lines = []
    for r, row in enumerate(T.rows):
        if isinstance(T, SkewShiftedTableau):
            lead = " ".join("." * width for _ in range(T.inner_part(r)))
            indent = " " * ((width + 1) * r)
            body = " ".join(letter_str(e).ljust(width) for e in row)
            lines.append((indent + (lead + " " if lead else "") + body).rstrip())
        else:
            indent = " " * ((width + 1) * T.offset(r))
            lines.append((indent + " ".join(letter_str(e).ljust(width) for e in row)).rstrip())
    return "\n".join(lines)


def compact(T) -> str:
    """One-line form such as ``1 2' 4 6' / 3 5'``."""
    return " / ".join(" ".join(letter_str(e) for e in row) for row in T.rows if row) or "()"


def to_json(T) -> dict:
    rows = [[{"v": abs(e), "p": e < 0} for e in row] for row in T.rows]
    if isinstance(T, SkewShiftedTableau):
        return {"shape": list(T.outer), "inner": list(T.inner), "rows": rows}
    out = {"shape": list(T.shape), "rows": rows}
    if not T.shifted:
        out["shifted"] = False
    return out


def from_json(data) -> AnyTableau:
    if isinstance(data, str):
        data = json.loads(data)
    rows = []
    for row in data["rows"]:
        new = []
        for cell in row:
            if isinstance(cell, dict):
                new.append(marked(int(cell["v"]), bool(cell.get("p", False))))
            else:
                new.append(int(cell))
        rows.append(tuple(new))
    shape = tuple(data.get("shape", [len(r) for r in rows]))
    if "inner" in data:
        return SkewShiftedTableau(shape, tuple(data["inner"]), rows)
    T = (ShiftedTableau if data.get("shifted", True) else YoungTableau)(rows)
    if T.shape != tuple(x for x in shape if x):
        raise ValueError(f"declared shape {shape} does not match rows {T.shape}")
    return T


def parse_compact(text: str, shifted: bool = True) -> ShiftedTableau | YoungTableau:
    """Inverse of :func:`compact`: ``"1 2' 4 / 3"``."""
    rows = []
    for chunk in text.split("/"):
        row = []
        for tok in chunk.split():
            primed = tok.endswith("'")
            row.append(marked(int(tok.rstrip("'")), primed))
        rows.append(tuple(row))
    return (ShiftedTableau if shifted else YoungTableau)(rows)
