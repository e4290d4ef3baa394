from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shiftedpr import _kernels, insertion
from shiftedpr.combinat import enumerate_partitions
from shiftedpr.insertion import (
    P_RS,
    P_SW,
    Q_SW,
    knuth_class,
    mixed,
    rectify,
    sagan_worley,
    schensted,
    shifted_knuth_class,
    shifted_knuth_neighbors,
)
from shiftedpr.tableaux import (
    SkewShiftedTableau,
    compact,
    descent_set_tableau,
    enumerate_ShSYT,
    enumerate_SYT,
    reading_word,
    unmark,
    validate,
)
from shiftedpr.words import descent_set, enumerate_permutations, inverse

perms = st.integers(1, 9).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


def longest_monotone(w, increasing=True):
    best = [1] * len(w)
    for i in range(len(w)):
        for j in range(i):
            if (w[j] < w[i]) == increasing:
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)


def test_trace_of_612543():
    res = sagan_worley((6, 1, 2, 5, 4, 3))
    assert [compact(s.P) for s in res.trace] == ["6", "1 6", "1 2 / 6", "1 2 5 / 6", "1 2 4 / 5 6", "1 2 3 6 / 4 5"]
    assert [s.non_schensted for s in res.trace] == [False, True, False, False, True, True]
    assert compact(res.Q) == "1 2' 4 6' / 3 5'"


def test_q_of_inverse():
    assert compact(Q_SW((2, 3, 6, 5, 4, 1))) == "1 2 3 6' / 4 5'"


@given(perms)
@settings(max_examples=300)
def test_sw_invariants(w):
    res = sagan_worley(w, keep_trace=False)
    assert res.P.shape == res.Q.shape
    assert validate(res.P)[0] and validate(res.Q)[0]
    assert sorted(reading_word(res.P)) == sorted(w)
    assert sorted(map(abs, reading_word(res.Q))) == list(range(1, len(w) + 1))
    assert descent_set_tableau(res.Q) == descent_set(w)


@given(perms)
@settings(max_examples=300)
def test_schensted_against_greene(w):
    P, Q = schensted(w)
    assert P.shape[0] == longest_monotone(w, True)
    assert len(P.shape) == longest_monotone(w, False)
    assert P_RS(inverse(w)) == Q


@pytest.mark.parametrize("n", range(1, 7))
def test_reading_words_insert_to_themselves(n):
    for lam in enumerate_partitions(n, strict=True):
        for T in enumerate_ShSYT(lam):
            assert P_SW(reading_word(T)) == T
    for lam in enumerate_partitions(n):
        for U in enumerate_SYT(lam):
            assert P_RS(reading_word(U)) == U


@given(st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple))
@settings(max_examples=100)
def test_word_is_equivalent_to_reading_word_of_its_tableau(w):
    assert reading_word(P_SW(w)) in shifted_knuth_class(w)
    assert reading_word(P_RS(w)) in knuth_class(w)


@pytest.mark.parametrize("n", range(1, 8))
def test_sw_is_a_bijection(n):
    pairs = {(P_SW(w), Q_SW(w)) for w in enumerate_permutations(n)}
    assert len(pairs) == factorial(n)


def test_known_classes():
    assert shifted_knuth_class((1, 2, 3)) == {(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 2, 1)}
    assert knuth_class((2, 1, 3)) == {(2, 1, 3), (2, 3, 1)}
    assert (2, 1, 3) in shifted_knuth_neighbors((1, 2, 3))


def test_mixed_insertion_is_dual_to_sw():
    for w in enumerate_permutations(5):
        Pm, Qm = mixed(w)
        assert Pm.shape == Qm.shape == P_SW(inverse(w)).shape
        assert Qm == P_SW(inverse(w))
        assert Pm == Q_SW(inverse(w))
        assert validate(unmark(Pm))[0]


def test_rectify():
    S = SkewShiftedTableau((4, 2, 1), (2,), ((1, 4), (2, 3), (5,)))
    assert compact(rectify(S)) == "1 2 3 4 / 5"


def test_distinct_letters_required():
    with pytest.raises(ValueError):
        sagan_worley((1, 1))


# --- numba kernels vs scalar code vs the uncompiled kernel body -------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_kernel_matches_scalar(n):
    table = insertion.insertion_table(n)
    for w, P, Q, RP in zip(table.perms, table.sw_P, table.sw_Q, table.rs_P):
        res = sagan_worley(w, keep_trace=False)
        assert (P, Q) == (res.P, res.Q)
        assert RP == P_RS(w)


@pytest.mark.parametrize("name", ["sw_insert_batch", "rs_insert_batch"])
def test_compiled_and_python_kernels_agree(name):
    rng = np.random.default_rng(0)
    arr = np.array([rng.permutation(8) + 1 for _ in range(200)], dtype=np.int8)
    kern = getattr(_kernels, name)
    for a, b in zip(kern(arr), kern.py_func(arr)):
        assert np.array_equal(a, b)


def test_mask_kernels():
    arr = insertion.permutation_array(6)
    des = _kernels.descent_masks(arr)
    for w, m in zip(arr[:50], des[:50]):
        assert m == sum(1 << i for i in descent_set(tuple(int(x) for x in w)).elems)
    _, Q = _kernels.sw_insert_batch(arr)
    assert np.array_equal(_kernels.marked_descent_masks(Q), des)
    assert np.array_equal(_kernels.marked_descent_masks.py_func(Q[:100]), des[:100])
    inv = _kernels.inverse_batch(arr)
    assert tuple(inv[7]) == inverse(tuple(int(x) for x in arr[7]))


def test_fibers_partition_the_group():
    fib = insertion.sw_fibers(5)
    assert sum(len(v) for v in fib.values()) == 120
    for T, ws in fib.items():
        assert len(ws) == len(enumerate_ShSYT(T.shape)) * 2 ** (5 - len(T.shape))
