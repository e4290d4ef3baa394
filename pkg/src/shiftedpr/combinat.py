"""Compositions, partitions, descent sets and peak sets.

Compositions and partitions are plain tuples of ints. Descent and peak sets
carry their degree ``n`` because the same set of integers means different
things in different degrees (e.g. the empty peak set of [n-1] indexes a
different basis element for each n).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate

from .config import check_cap

Composition = tuple[int, ...]
Partition = tuple[int, ...]


@dataclass(frozen=True, order=True)
class DescentSet:
    n: int
    elems: tuple[int, ...] = ()

    def __post_init__(self):
        elems = tuple(sorted(set(self.elems)))
        object.__setattr__(self, "elems", elems)
        if self.n < 0:
            raise ValueError(f"negative degree {self.n}")
        for i in elems:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"descent {i} outside [1, {self.n - 1}]")

    def __contains__(self, i):
        return i in self.elems

    def __iter__(self):
        return iter(self.elems)

    def __len__(self):
        return len(self.elems)

    @property
    def mask(self) -> int:
        m = 0
        for i in self.elems:
            m |= 1 << i
        return m

    def to_json(self) -> dict:
        return {"n": self.n, "elems": list(self.elems)}

    def __repr__(self):
        return f"Des{{{','.join(map(str, self.elems))}}}_{self.n}"


@dataclass(frozen=True, order=True)
class PeakSet:
    n: int
    elems: tuple[int, ...] = ()

    def __post_init__(self):
        elems = tuple(sorted(set(self.elems)))
        object.__setattr__(self, "elems", elems)
        for i in elems:
            if not 2 <= i <= self.n - 1:
                raise ValueError(f"peak {i} outside [2, {self.n - 1}]")
        for a, b in zip(elems, elems[1:]):
            if b == a + 1:
                raise ValueError(f"consecutive peaks {a}, {b}")

    def __contains__(self, i):
        return i in self.elems

    def __iter__(self):
        return iter(self.elems)

    def __len__(self):
        return len(self.elems)

    def to_json(self) -> dict:
        return {"n": self.n, "elems": list(self.elems)}

    def __repr__(self):
        return f"Peak{{{','.join(map(str, self.elems))}}}_{self.n}"


def is_composition(alpha) -> bool:
    return all(isinstance(a, int) and a >= 1 for a in alpha)


def is_partition(lam, strict: bool = False) -> bool:
    if not is_composition(lam):
        return False
    if strict:
        return all(a > b for a, b in zip(lam, lam[1:]))
    return all(a >= b for a, b in zip(lam, lam[1:]))


def descent_set_of_composition(alpha: Composition) -> DescentSet:
    alpha = tuple(alpha)
    if not is_composition(alpha):
        raise ValueError(f"not a composition: {alpha}")
    sums = list(accumulate(alpha))
    n = sums[-1] if sums else 0
    return DescentSet(n, tuple(sums[:-1]))


def composition_of_subset(D: DescentSet) -> Composition:
    if D.n == 0:
        return ()
    cuts = (0, *D.elems, D.n)
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def refines(alpha: Composition, beta: Composition) -> bool:
    """``alpha`` is finer than or equal to ``beta`` (D(beta) is a subset of D(alpha))."""
    if sum(alpha) != sum(beta):
        raise ValueError(f"degree mismatch: {alpha} vs {beta}")
    return set(descent_set_of_composition(beta).elems) <= set(descent_set_of_composition(alpha).elems)


def peak_set(D: DescentSet) -> PeakSet:
    s = set(D.elems)
    return PeakSet(D.n, tuple(i for i in D.elems if i != 1 and i - 1 not in s))


def peak_set_of_composition(alpha: Composition) -> PeakSet:
    return peak_set(descent_set_of_composition(alpha))


def triangle(D: DescentSet) -> frozenset[int]:
    """D symmetric-difference (D + 1); may contain n."""
    s = set(D.elems)
    t = {i + 1 for i in s}
    return frozenset((s - t) | (t - s))


def union_shift(D: DescentSet) -> frozenset[int]:
    """D union (D + 1)."""
    s = set(D.elems)
    return frozenset(s | {i + 1 for i in s})


def mask_to_set(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_compositions(n: int) -> tuple[Composition, ...]:
    """All compositions of n, ordered by the bitmask of their descent set."""
    check_cap(n)
    if n == 0:
        return ((),)
    out = []
    for m in range(1 << (n - 1)):
        elems = tuple(i + 1 for i in range(n - 1) if m >> i & 1)
        out.append(composition_of_subset(DescentSet(n, elems)))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_partitions(n: int, strict: bool = False) -> tuple[Partition, ...]:
    """Partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("negative degree")
    check_cap(n)

    def gen(rest, bound):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, bound), 0, -1):
            nxt = first - 1 if strict else first
            for tail in gen(rest - first, nxt):
                yield (first, *tail)

    return tuple(gen(n, n))


@lru_cache(maxsize=None)
def enumerate_peak_sets(n: int) -> tuple[PeakSet, ...]:
    """Subsets of [2, n-1] with no two consecutive elements, in bitmask order."""
    if n < 0:
        raise ValueError("negative degree")
    check_cap(n)
    out = []
    span = list(range(2, n))
    for m in range(1 << len(span)):
        if m & (m >> 1):
            continue
        out.append(PeakSet(n, tuple(span[i] for i in range(len(span)) if m >> i & 1)))
    return tuple(out)


def parse_partition(text: str) -> Partition:
    """Parse "3,2" or "32" (single-digit parts) into a tuple."""
    text = text.strip().strip("()[]")
    if not text:
        return ()
    parts = [p for p in text.replace(" ", ",").split(",") if p] if "," in text or " " in text else list(text)
    try:
        lam = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    if not is_composition(lam):
        raise ValueError(f"malformed partition {text!r}")
    return lam
