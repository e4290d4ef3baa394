import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shiftedpr import qsym
from shiftedpr.combinat import PeakSet, enumerate_compositions, enumerate_peak_sets
from shiftedpr.freemodule import LinComb
from shiftedpr.schur import poly_mul, poly_of_qsym

comps = st.integers(1, 4).flatmap(lambda n: st.sampled_from(enumerate_compositions(n)))


def test_f_to_m_small():
    assert qsym.F_to_M(qsym.F((2,))) == LinComb({(2,): 1, (1, 1): 1})
    assert qsym.F_to_M(qsym.F((1, 1))) == LinComb({(1, 1): 1})


@pytest.mark.parametrize("n", range(1, 7))
def test_f_m_inverse(n):
    for alpha in enumerate_compositions(n):
        assert qsym.M_to_F(qsym.F_to_M(qsym.F(alpha))) == qsym.F(alpha)
        assert qsym.F_to_M(qsym.M_to_F(qsym.M(alpha))) == qsym.M(alpha)


@given(comps, comps)
@settings(max_examples=60, deadline=None)
def test_product_matches_polynomial_oracle(a, b):
    k = sum(a) + sum(b)
    prod = qsym.qsym_product(qsym.F(a), qsym.F(b))
    assert poly_of_qsym(prod, k) == poly_mul(poly_of_qsym(qsym.F(a), k), poly_of_qsym(qsym.F(b), k))


@given(comps, comps)
@settings(max_examples=60, deadline=None)
def test_product_independent_of_representatives(a, b):
    assert qsym.qsym_product(qsym.F(a), qsym.F(b)) == qsym.qsym_product(qsym.F(a), qsym.F(b), rep="complement")


def test_representatives_have_the_right_descents():
    for n in range(1, 7):
        for alpha in enumerate_compositions(n):
            assert qsym.c_of(qsym.canonical_representative(alpha)) == alpha
            assert qsym.c_of(qsym.complement_representative(alpha)) == alpha


@pytest.mark.parametrize("n", range(1, 7))
def test_h_r_inverse(n):
    for alpha in enumerate_compositions(n):
        assert qsym.R_to_H(qsym.H_to_R(qsym.H(alpha))) == qsym.H(alpha)


def test_nsym_product_and_coproduct():
    assert qsym.nsym_product(qsym.H((1,)), qsym.H((2,))) == qsym.H((1, 2))
    cop = qsym.nsym_coproduct(qsym.H((2,)))
    assert cop == LinComb({((), (2,)): 1, ((1,), (1,)): 1, ((2,), ()): 1})


def test_pairings_are_dual():
    for n in range(1, 5):
        cs = enumerate_compositions(n)
        for a in cs:
            for b in cs:
                assert qsym.pairing_qsym_nsym(qsym.R(a), qsym.F(b)) == (a == b)
                assert qsym.pairing_qsym_nsym(qsym.H(a), qsym.M(b)) == (a == b)


def test_peak_functions_small():
    assert qsym.peak_K(PeakSet(1)) == LinComb({(1,): 2})
    assert qsym.peak_K(PeakSet(3, (2,))) == LinComb({(1, 2): 4, (2, 1): 4})


@pytest.mark.parametrize("n", range(1, 8))
def test_peak_function_two_forms(n):
    for P in enumerate_peak_sets(n):
        assert qsym.F_to_M(qsym.peak_K_F(P)) == qsym.peak_K_M(P)


def test_vartheta_on_fundamentals():
    assert qsym.vartheta_map(qsym.F((1, 2))) == LinComb({PeakSet(3, ()): 1})
    assert qsym.vartheta_map(qsym.F((2, 1))) == LinComb({PeakSet(3, (2,)): 1})


@pytest.mark.parametrize("n", range(1, 6))
def test_theta_routes(n):
    for alpha in enumerate_compositions(n):
        h_route = qsym.Theta_map(qsym.H(alpha), route="H")
        r_route = qsym.Theta_map(qsym.H_to_R(qsym.H(alpha)), route="R")
        assert h_route == r_route


def test_peak_to_nsym():
    # Pi_{} in degree 3: permutations 123, 213, 312, 321 have no peak; descent classes (3), (1,2), (1,1,1)
    assert qsym.peak_to_nsym(LinComb({PeakSet(3): 1})) == LinComb({(3,): 1, (1, 2): 1, (1, 1, 1): 1})


def test_pi_prime_and_pr_to_qsym():
    assert qsym.pi_prime(LinComb({(2, 1, 3): 1, (1, 2, 3): 1})) == LinComb({(1, 2): 1, (3,): 1})
    from shiftedpr.tableaux import parse_compact

    assert qsym.pr_to_qsym(LinComb({parse_compact("1 2 / 3", shifted=False): 1})) == LinComb({(2, 1): 1})


def test_bad_basis():
    with pytest.raises(ValueError):
        qsym.to_F(LinComb({(1,): 1}, basis="H"))
