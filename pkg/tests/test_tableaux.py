from fractions import Fraction
from math import factorial, prod

import pytest

from shiftedpr.combinat import enumerate_partitions
from shiftedpr.tableaux import (
    ShiftedTableau,
    SkewShiftedTableau,
    YoungTableau,
    compact,
    composition_of_tableau,
    concat_after_shift,
    decompose_prefix,
    descent_set_tableau,
    enumerate_ShSSYT_pm,
    enumerate_ShSYT,
    enumerate_skew_ShSYT,
    enumerate_SYT,
    from_json,
    markings,
    parse_compact,
    peak_set_tableau,
    reading_word,
    render,
    row_tableau,
    standardize_marked,
    strict_supersets,
    to_json,
    validate,
    weight,
)


def thrall(lam):
    """Number of standard shifted tableaux of strict shape lam."""
    n = sum(lam)
    g = Fraction(factorial(n), prod(factorial(x) for x in lam))
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            g *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
    return int(g)


def hook_count(lam):
    n = sum(lam)
    conj = [sum(1 for x in lam if x > c) for c in range(lam[0])] if lam else []
    hooks = prod(lam[r] - c + conj[c] - r - 1 for r in range(len(lam)) for c in range(lam[r]))
    return factorial(n) // hooks


@pytest.mark.parametrize("n", range(1, 10))
def test_shifted_standard_counts(n):
    for lam in enumerate_partitions(n, strict=True):
        ts = enumerate_ShSYT(lam)
        assert len(ts) == thrall(lam)
        assert len(set(ts)) == len(ts)
        assert all(validate(T)[0] for T in ts)


@pytest.mark.parametrize("n", range(1, 8))
def test_standard_young_counts(n):
    for lam in enumerate_partitions(n):
        assert len(enumerate_SYT(lam)) == hook_count(lam)


def test_shifted_geometry():
    T = parse_compact("1 2 4 6 / 3 5 8 / 7 9")
    assert T.shape == (4, 3, 2)
    assert T.size == 9
    assert [(r, c) for r, c, _ in T.cells()][:5] == [(0, 0), (0, 1), (0, 2), (0, 3), (1, 1)]
    assert render(T) == "1 2 4 6\n  3 5 8\n    7 9"


def test_validate_rejects_bad_fillings():
    assert not validate(ShiftedTableau(((1, 3), (2,))))[0]  # column 3 above 2
    assert not validate(ShiftedTableau(((2, 1),)))[0]
    assert not validate(ShiftedTableau(((1, 2), (3, 4))))[0]  # shape (2, 2) is not strict
    ok, msg = validate(parse_compact("1 2 / 3'"))
    assert not ok and "diagonal" in msg
    assert validate(parse_compact("1 2 / 3'"), diagonal_primes=True)[0]


def test_reading_word_and_weight():
    T = parse_compact("1 3' 4' 4 / 3' 4 6 / 6")
    assert reading_word(T) == (6, -3, 4, 6, 1, -3, -4, 4)
    assert weight(T) == (1, 0, 2, 3, 0, 2)
    assert compact(standardize_marked(T)) == "1 2' 4' 6 / 3' 5 8 / 7"


def test_descent_rules_for_marked_tableaux():
    # i unprimed and strictly above i+1, or i+1 primed and weakly above i
    assert descent_set_tableau(parse_compact("1 2' 4 6' / 3 5'")).elems == (1, 4, 5)
    assert descent_set_tableau(parse_compact("1 2 3 6' / 4 5'")).elems == (3, 4, 5)
    assert descent_set_tableau(parse_compact("1 3 4 / 2 / 5", shifted=False)).elems == (1, 4)
    assert peak_set_tableau(parse_compact("1 2 4 6 / 3 5 8 / 7 9")).elems == (2, 4, 6, 8)
    assert composition_of_tableau(parse_compact("1 2 / 3", shifted=False)) == (2, 1)


def test_markings_skip_the_diagonal():
    T = parse_compact("1 2 4 / 3")
    ms = list(markings(T))
    assert len(ms) == 2 ** (4 - 2)
    assert all(validate(S)[0] for S in ms)
    assert len(list(markings(parse_compact("1 2 / 3", shifted=False)))) == 8


def test_concat_and_prefix_roundtrip():
    T = parse_compact("1 2 4 / 3")
    S = SkewShiftedTableau((4, 3, 1), (3, 1), ((2,), (1, 4), (3,)))
    U = concat_after_shift(T, S)
    assert compact(U) == "1 2 4 6 / 3 5 8 / 7"
    head, rest = decompose_prefix(U, 4)
    assert head == T and rest == S


def test_skew_enumeration_counts():
    # |ShSYT(nu / (1))| summed over nu of size n+1 equals |ShSYT| of size n+1 (first box is forced)
    for n in range(1, 6):
        total = sum(len(enumerate_skew_ShSYT(nu, (1,))) for nu in strict_supersets((1,), n))
        assert total == sum(len(enumerate_ShSYT(lam)) for lam in enumerate_partitions(n + 1, strict=True))


def test_row_tableau():
    assert compact(row_tableau((3, 1))) == "1 2 3 / 4"


def test_semistandard_marked_counts():
    # P_(1)(x1, x2) = x1 + x2, P_(2)(x1, x2) has 1 + 2 + 1 ... monomials
    assert len(enumerate_ShSSYT_pm((1,), 2)) == 2
    assert len(enumerate_ShSSYT_pm((2,), 2)) == 4  # 11, 12', 12, 22
    assert all(validate(T)[0] for T in enumerate_ShSSYT_pm((3, 1), 3))


def test_json_roundtrip():
    for T in [
        parse_compact("1 2' 4 6' / 3 5'"),
        parse_compact("1 3 4 / 2 / 5", shifted=False),
        SkewShiftedTableau((4, 2, 1), (2,), ((1, 4), (2, 3), (5,))),
    ]:
        assert from_json(to_json(T)) == T


def test_from_json_accepts_cli_form():
    T = from_json('{"shape":[2,1],"rows":[[{"v":1},{"v":2,"p":true}],[{"v":3}]]}')
    assert compact(T) == "1 2' / 3"
    with pytest.raises(ValueError):
        from_json('{"shape":[3],"rows":[[{"v":1}]]}')


def test_young_tableau_is_not_shifted():
    U = YoungTableau(((1, 3), (2,)))
    assert not U.shifted and U.shape == (2, 1)
