import json
from fractions import Fraction

from shiftedpr.combinat import PeakSet
from shiftedpr.freemodule import LinComb, bilinear, key_degree, map_tensor, pairing, tensor, to_json
from shiftedpr.tableaux import parse_compact


def test_zero_coefficients_are_dropped():
    x = LinComb({(1, 2): 2, (2, 1): 1}, basis="perm")
    y = LinComb({(1, 2): 2}, basis="perm")
    d = x - y
    assert d == LinComb({(2, 1): 1}) and (1, 2) not in d
    assert (x - x) == 0
    x.add_term((2, 1), -1)
    assert (2, 1) not in x


def test_arithmetic_keeps_basis():
    x = LinComb.monomial((2, 1), basis="F")
    assert (x + x).basis == "F"
    assert (3 * x)[(2, 1)] == 3
    assert (-x)[(2, 1)] == -1


def test_bilinear_and_tensor():
    x = LinComb({"a": 1, "b": 2})
    y = LinComb({"c": 3})
    assert bilinear(lambda p, q: LinComb.monomial(p + q), x, y) == LinComb({"ac": 3, "bc": 6})
    t = tensor(LinComb({"a": 1}, basis="u"), LinComb({"c": 2}, basis="v"))
    assert t.basis == "u.v" and t == LinComb({("a", "c"): 2})
    doubled = map_tensor(lambda k: LinComb({k: 2}), lambda k: LinComb({k: 1}), t)
    assert doubled == LinComb({("a", "c"): 4})


def test_pairing():
    assert pairing(LinComb({"a": 2, "b": 1}), LinComb({"a": 3, "c": 5})) == 6


def test_key_degree():
    assert key_degree((3, 1, 2), "perm") == 3
    assert key_degree((3, 1, 2), "F") == 6
    assert key_degree(parse_compact("1 2 / 3"), "shsyt") == 3
    assert key_degree(PeakSet(5, (3,)), "K") == 5
    assert key_degree(((2, 1), (1,)), "perm.perm") == 3


def test_json_is_serializable():
    x = LinComb({PeakSet(5, (3,)): Fraction(1, 4), PeakSet(5, (2, 4)): 2}, basis="K")
    data = json.loads(json.dumps(to_json(x, key_name="index")))
    assert data["basis"] == "K" and data["degree"] == 5
    assert {"index": {"n": 5, "elems": [3]}, "coeff": "1/4"} in data["terms"]
    t = LinComb({(parse_compact("1"), parse_compact("1", shifted=False)): 2}, basis="shsyt.syt")
    assert json.loads(json.dumps(to_json(t)))["degree"] == 2
