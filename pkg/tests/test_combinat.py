from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftedpr.combinat import (
    DescentSet,
    PeakSet,
    composition_of_subset,
    descent_set_of_composition,
    enumerate_compositions,
    enumerate_partitions,
    enumerate_peak_sets,
    mask_to_set,
    parse_partition,
    peak_set,
    refines,
    triangle,
    union_shift,
)
from shiftedpr.config import CapExceeded, check_cap, degree_cap


def brute_partitions(n, strict):
    def gen(rest, bound):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, bound), 0, -1):
            for tail in gen(rest - part, part - 1 if strict else part):
                yield (part,) + tail
    return set(gen(n, n))


@pytest.mark.parametrize("n", range(0, 9))
def test_composition_counts(n):
    comps = enumerate_compositions(n)
    assert len(comps) == (2 ** (n - 1) if n else 1)
    assert all(sum(a) == n for a in comps)
    assert len(set(comps)) == len(comps)


@pytest.mark.parametrize("n", range(0, 10))
@pytest.mark.parametrize("strict", [False, True])
def test_partitions_match_brute_force(n, strict):
    assert set(enumerate_partitions(n, strict=strict)) == brute_partitions(n, strict)


@pytest.mark.parametrize("n", range(1, 9))
def test_peak_sets_are_the_sparse_subsets(n):
    expected = set()
    for k in range(n):
        for S in combinations(range(2, n), k):
            if all(b - a > 1 for a, b in zip(S, S[1:])):
                expected.add(S)
    assert {P.elems for P in enumerate_peak_sets(n)} == expected


@given(st.lists(st.integers(1, 4), min_size=1, max_size=6))
def test_composition_subset_roundtrip(alpha):
    alpha = tuple(alpha)
    assert composition_of_subset(descent_set_of_composition(alpha)) == alpha


def test_descent_set_of_composition():
    assert descent_set_of_composition((2, 1, 3)).elems == (2, 3)
    assert descent_set_of_composition((2, 1, 3)).n == 6
    assert descent_set_of_composition((2, 1, 3)).mask == 0b1100


def test_peak_set_and_triangle():
    D = DescentSet(9, (2, 3, 5, 8))
    assert peak_set(D).elems == (2, 5, 8)
    assert triangle(D) == frozenset({2, 4, 5, 6, 8, 9})
    assert union_shift(D) == frozenset({2, 3, 4, 5, 6, 8, 9})


def test_peak_set_skips_position_one():
    assert peak_set(DescentSet(4, (1, 3))).elems == (3,)


def test_refines():
    assert refines((1, 1, 2), (2, 2))
    assert not refines((2, 2), (1, 1, 2))
    assert refines((3,), (3,))
    with pytest.raises(ValueError):
        refines((1,), (2,))


def test_validation_errors():
    with pytest.raises(ValueError):
        DescentSet(3, (3,))
    with pytest.raises(ValueError):
        PeakSet(5, (1,))
    with pytest.raises(ValueError):
        PeakSet(6, (2, 3))


def test_mask_to_set():
    assert mask_to_set(0b10110) == (1, 2, 4)
    assert mask_to_set(0) == ()


@pytest.mark.parametrize("text,expected", [("3,2", (3, 2)), ("32", (3, 2)), ("(4, 3, 1)", (4, 3, 1)), ("", ())])
def test_parse_partition(text, expected):
    assert parse_partition(text) == expected


@pytest.mark.parametrize("text", ["3,x", "3,0"])
def test_parse_partition_rejects(text):
    with pytest.raises(ValueError):
        parse_partition(text)


def test_cap(monkeypatch):
    monkeypatch.delenv("SHIFTEDPR_CAP", raising=False)
    assert degree_cap() == 9
    monkeypatch.setenv("SHIFTEDPR_CAP", "5")
    assert degree_cap() == 5
    with pytest.raises(CapExceeded):
        check_cap(6)
    check_cap(6, cap=6)
