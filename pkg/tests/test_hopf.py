from itertools import permutations
from math import comb

import pytest

from shiftedpr import hopf
from shiftedpr.combinat import PeakSet, enumerate_partitions
from shiftedpr.freemodule import LinComb
from shiftedpr.insertion import P_SW
from shiftedpr.tableaux import compact, enumerate_ShSYT, parse_compact, reading_word
from shiftedpr.words import standardize

sh = parse_compact


def yt(text):
    return parse_compact(text, shifted=False)


def brute_convolution(w, v):
    """All words uv on [p+q] with st(u) = w and st(v) = v, by filtering S_{p+q}."""
    n = len(w) + len(v)
    return {x for x in permutations(range(1, n + 1)) if standardize(x[: len(w)]) == w and standardize(x[len(w):]) == v}


@pytest.mark.parametrize("w,v", [((1,), (1,)), ((2, 1), (1,)), ((1, 2), (2, 1, 3)), ((3, 1, 2), (2, 1))])
def test_mr_product_against_brute_force(w, v):
    prod = hopf.mr_product(w, v)
    assert set(prod) == brute_convolution(w, v)
    assert all(c == 1 for c in prod.values())
    assert len(prod) == comb(len(w) + len(v), len(w))


def test_mr_prime_product_is_shifted_shuffle():
    assert hopf.mr_prime_product((1,), (1,)) == LinComb({(1, 2): 1, (2, 1): 1})
    assert len(hopf.mr_prime_product((2, 1), (1, 2))) == 6


def test_coproducts():
    d = hopf.mr_coproduct((3, 1, 2))
    assert d == LinComb({((), (3, 1, 2)): 1, ((1,), (2, 1)): 1, ((1, 2), (1,)): 1, ((3, 1, 2), ()): 1})
    dp = hopf.mr_prime_coproduct((3, 1, 2))
    assert dp == LinComb({((), (3, 1, 2)): 1, ((1,), (1, 2)): 1, ((2, 1), (1,)): 1, ((3, 1, 2), ()): 1})


def test_eta_and_counit():
    assert hopf.eta((2, 3, 1)) == LinComb({(3, 1, 2): 1})
    assert hopf.counit(LinComb({(): 4, (1,): 1})) == 4


def test_left_ideal_counterexample():
    a = hopf.project_to_spr(hopf.mr_product((1, 2), (1, 2, 3)))
    b = hopf.project_to_spr(hopf.mr_product((1, 2), (2, 1, 3)))
    assert a != b
    assert a[sh("1 2 3 4 5")] == 2 and b[sh("1 2 3 4 5")] == 2
    assert a[sh("1 2 3 / 4 5")] == 1 and sh("1 2 3 / 4 5") not in b


def test_module_action_small():
    assert hopf.spr_module_action(sh("1"), yt("1")) == LinComb({sh("1 2"): 2})


def test_spr_coproduct_of_row():
    d = hopf.spr_coproduct(sh("1 2 3"))
    assert sum(d.values()) == 4
    assert d[(sh("1"), sh("1 2"))] == 1


def test_class_sums_regroup():
    T = sh("1 2 4 / 3")
    perms = hopf.spr_class(T)
    assert len(perms) == len(enumerate_ShSYT(T.shape)) * 2 ** (4 - 2)
    assert hopf.regroup_scl(perms) == LinComb({T: 1})
    with pytest.raises(hopf.NotAClassSum):
        hopf.regroup_scl(LinComb({reading_word(T): 1}))


@pytest.mark.parametrize("n", range(1, 6))
def test_sprp_product_two_ways(n):
    for p in range(1, n):
        for T1 in hopf.all_shsyt(p):
            for T2 in hopf.all_shsyt(n - p):
                assert hopf.sprp_product(T1, T2) == hopf.sprp_product_via_permutations(T1, T2)


def test_sprp_box_times_box():
    assert hopf.sprp_product(sh("1"), sh("1")) == LinComb({sh("1 2"): 1})


def test_sprp_coproduct_blocks():
    for T in hopf.all_shsyt(5):
        hopf.sprp_coproduct(T)  # raises if a split is not a block of classes


def test_peak_embedding():
    P = PeakSet(4, (2,))
    assert hopf.expand_scl(hopf.peak_embedding(P)) == hopf.eta(hopf.peak_sum(P))
    assert set(hopf.peak_embedding(PeakSet(3))) == {sh("1 2 3")}


def test_iota_ribbon_sums():
    assert hopf.iota_R((1, 1)) == LinComb({(2, 1): 1})
    assert hopf.iota_H((1, 1)) == LinComb({(1, 2): 1, (2, 1): 1})


def test_frak_s_examples():
    frak = hopf.frakS_T(sh("1 2 3 4 / 5"))
    assert sorted(frak) == sorted(
        tuple(int(c) for c in s) for s in ["12354", "21354", "31254", "32154", "41253", "42153", "43152", "43251"]
    )
    for lam in enumerate_partitions(5, strict=True):
        for T in enumerate_ShSYT(lam):
            assert len(hopf.frakS_T(T)) == 2 ** (5 - len(lam))


def test_j_fails_to_be_a_coalgebra_map():
    T = sh("1 2 3 6 / 4 5 / 7")
    left = hopf.pr_coproduct(hopf.j_map(T))
    from shiftedpr.freemodule import map_tensor

    right = map_tensor(hopf.j_map, hopf.j_map, hopf.spr_coproduct(T), "syt.syt")
    assert left != right


def test_xi_of_box():
    assert hopf.xi_map(yt("1")) == LinComb({sh("1"): 2})


def test_class_pairing():
    T = P_SW((2, 1, 3))
    assert hopf.class_pairing(yt("1 2 3"), LinComb({T: 1})) == 1
    assert compact(T) == "1 2 3"
