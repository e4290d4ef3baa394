from fractions import Fraction

import pytest

from shiftedpr import qsym, schur
from shiftedpr.combinat import DescentSet, PeakSet, enumerate_partitions, enumerate_peak_sets
from shiftedpr.freemodule import LinComb
from shiftedpr.tableaux import compact, enumerate_ShSYT, parse_compact, peak_set_tableau


def test_small_schur_p_functions():
    assert schur.schurP((1,)) == qsym.F((1,))
    assert schur.schurP((2,)) == LinComb({(2,): 1, (1, 1): 1})
    assert qsym.F_to_M(schur.schurP((2,))) == LinComb({(2,): 1, (1, 1): 2})
    assert schur.schurQ((1,)) == LinComb({(1,): 2})


def test_known_schur_expansions():
    assert schur.expand(schur.schurP((2,)), "schur") == LinComb({(2,): 1, (1, 1): 1})
    assert schur.expand(schur.schurP((2, 1)), "schur") == LinComb({(2, 1): 1})
    assert schur.expand(schur.schurP((3, 1)), "schur") == LinComb({(3, 1): 1, (2, 2): 1, (2, 1, 1): 1})


@pytest.mark.parametrize("n", range(1, 6))
def test_truncations_match_tableau_sums(n):
    for lam in enumerate_partitions(n):
        assert schur.poly_of_qsym(schur.schur(lam), n) == schur.schur_poly(lam, n)
        assert schur.poly_of_qsym(schur.modified_schur(lam), n) == schur.modified_schur_poly(lam, n)
    for lam in enumerate_partitions(n, strict=True):
        assert schur.poly_of_qsym(schur.schurP(lam), n) == schur.schurP_poly(lam, n)


def test_decompose_reports_residual():
    d = schur.decompose(qsym.F((1, 2)), "schur")
    assert not d.ok and d.residual
    with pytest.raises(ValueError):
        schur.expand(qsym.F((1, 2)), "schur")
    assert schur.decompose(schur.schurP((3, 2)), "K").coeffs == LinComb(
        {PeakSet(5, (2, 4)): Fraction(1, 4), PeakSet(5, (3,)): Fraction(1, 4)}
    )


def test_from_basis_roundtrip():
    for lam in enumerate_partitions(4):
        x = schur.schur(lam)
        assert schur.from_basis(schur.expand(x, "h"), "h") == x


def test_theta_on_h():
    assert schur.theta_map(schur.h(2)) == schur.q(2)
    assert schur.theta_map(schur.schur((2, 1))) == schur.modified_schur((2, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_modified_schur_is_theta_of_schur(n):
    for lam in enumerate_partitions(n):
        assert schur.modified_schur(lam) == schur.theta_map(schur.schur(lam))


def test_shifted_lr_small():
    assert schur.shifted_LR((1,), (1,)) == LinComb({(2,): 1})
    assert schur.shifted_LR((2,), (1,)) == LinComb({(3,): 1, (2, 1): 1})
    assert schur.shifted_LR((3, 1), (2,)) == LinComb({(5, 1): 1, (4, 2): 2, (3, 2, 1): 1})
    with pytest.raises(ValueError):
        schur.shifted_LR((1,), (2,), parse_compact("1"))


@pytest.mark.parametrize("n", range(1, 7))
def test_kf1(n):
    for lam in enumerate_partitions(n, strict=True):
        for T in enumerate_ShSYT(lam):
            assert schur.kf1_expand(T) == qsym.peak_K(peak_set_tableau(T))


def test_marked_count_example():
    T = parse_compact("1 2 4 6 / 3 5 8 / 7 9")
    res = schur.count_marked_with_descents(T, DescentSet(9, (2, 3, 5, 8)), keep=True)
    assert res.admissible and res.count == res.expected == 4
    assert sorted(map(compact, res.witnesses)) == sorted([
        "1 2 4' 6' / 3 5 8 / 7 9",
        "1 2 4' 6' / 3 5' 8 / 7 9",
        "1 2 4' 6' / 3 5 8 / 7 9'",
        "1 2 4' 6' / 3 5' 8 / 7 9'",
    ])
    off = schur.count_marked_with_descents(T, DescentSet(9, ()))
    assert not off.admissible and off.count == 0 and off.expected is None


def test_phi_peak():
    for n in range(1, 6):
        assert schur.phi_peak(PeakSet(n)) == schur.schurP((n,))
        for P in enumerate_peak_sets(n):
            assert schur.phi_peak(P) == schur.phi_peak_via_nsym(LinComb({P: 1}, basis="peakset"))


def test_pairings():
    assert schur.hall_pairing(schur.schur((2, 1)), schur.schur((2, 1))) == 1
    assert schur.omega_pairing(schur.schurP((3,)), schur.schurQ((3,))) == 1
    assert schur.omega_pairing(schur.schurP((3,)), schur.schurQ((2, 1))) == 0
    assert schur.pairing_peak(LinComb({PeakSet(4, (2,)): 1}, basis="peakset"), schur.schurQ((3, 1))) == 1


def test_q_generating_function():
    from collections import Counter
    from itertools import combinations, combinations_with_replacement

    def e(a, k):
        return Counter(tuple(1 if i in S else 0 for i in range(k)) for S in combinations(range(k), a))

    def h(b, k):
        out = Counter()
        for seq in combinations_with_replacement(range(k), b):
            out[tuple(seq.count(i) for i in range(k))] += 1
        return out

    for n in range(1, 5):
        total = Counter()
        for a in range(n + 1):
            total = schur.poly_add(total, schur.poly_mul(e(a, n), h(n - a, n)))
        assert total == schur.poly_of_qsym(schur.q(n), n)
