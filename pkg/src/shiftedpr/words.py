"""Words and permutations in one-line notation (tuples of positive ints)."""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import combinations, islice, permutations

from .combinat import DescentSet, PeakSet, peak_set
from .config import check_cap

Word = tuple[int, ...]
Permutation = tuple[int, ...]


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def standardize(w: Sequence[int]) -> Permutation:
    """Ranks of the letters of ``w``; equal letters are ranked left to right."""
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def descent_set(w: Sequence[int]) -> DescentSet:
    return DescentSet(len(w), tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]))


def peak_set_perm(w: Sequence[int]) -> PeakSet:
    return peak_set(descent_set(w))


def inverse(w: Sequence[int]) -> Permutation:
    out = [0] * len(w)
    for i, v in enumerate(w, 1):
        out[v - 1] = i
    return tuple(out)


def restrict(w: Sequence[int], lo: int, hi: int) -> Word:
    """Subword of ``w`` keeping the letters in the interval [lo, hi]."""
    return tuple(v for v in w if lo <= v <= hi)


def shift(w: Sequence[int], p: int) -> Word:
    if p < 0:
        raise ValueError("shift must be nonnegative")
    return tuple(v + p for v in w)


def shuffle(u: Sequence[int], v: Sequence[int]) -> list[Word]:
    """All interleavings of ``u`` and ``v``, with multiplicity.

    Enumerated by choosing the positions of ``u``; this agrees with the
    first-letter recursion of the shuffle product term by term.
    """
    u, v = tuple(u), tuple(v)
    p, q = len(u), len(v)
    out = []
    for pos in combinations(range(p + q), p):
        word = [0] * (p + q)
        chosen = set(pos)
        it_u, it_v = iter(u), iter(v)
        for i in range(p + q):
            word[i] = next(it_u) if i in chosen else next(it_v)
        out.append(tuple(word))
    return out


def swap_first_two(w: Sequence[int]) -> Word:
    if len(w) < 2:
        return tuple(w)
    return (w[1], w[0], *w[2:])


def enumerate_permutations(n: int, cap: int | None = None) -> Iterator[Permutation]:
    """Stream S_n in lexicographic order."""
    if n < 0:
        raise ValueError("negative degree")
    check_cap(n, cap)
    return permutations(range(1, n + 1))


def permutation_range(n: int, start: int, stop: int, cap: int | None = None) -> Iterator[Permutation]:
    """Slice [start, stop) of the lexicographic stream, for splitting sweeps across workers."""
    return islice(enumerate_permutations(n, cap), start, stop)


def parse_word(text: str) -> Word:
    """Parse "612543" (single digits) or "10,2,3" (comma/space separated)."""
    text = text.strip()
    if not text:
        return ()
    if "," in text or " " in text:
        parts = [p for p in text.replace(",", " ").split() if p]
    else:
        parts = list(text)
    try:
        w = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed word {text!r}") from None
    if any(v < 1 for v in w):
        raise ValueError(f"letters must be positive: {text!r}")
    return w


def parse_permutation(text: str) -> Permutation:
    w = parse_word(text)
    if not is_permutation(w):
        raise ValueError(f"not a permutation in one-line notation: {text!r}")
    return w


def format_word(w: Sequence[int]) -> str:
    if all(v < 10 for v in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))
