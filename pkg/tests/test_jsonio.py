import json
from fractions import Fraction

import pytest

from tannaka_forge import jsonio
from tannaka_forge.builtin import heisenberg, sl2, sl2_irreducible
from tannaka_forge.exactlin import QMatrix
from tannaka_forge.tannaka import NatFamily
from tannaka_forge.toric import weight_monoid_from_generators
from tannaka_forge.uea import TruncatedDualElement, matrix_coefficient


def test_rational_strings():
    assert jsonio.rational_to_json(Fraction(3, 6)) == "1/2"
    assert jsonio.rational_to_json(Fraction(-7)) == "-7"
    assert jsonio.rational_from_json("2/4") == Fraction(1, 2)
    assert jsonio.rational_from_json(5) == Fraction(5)


def test_algebra_roundtrip():
    g = sl2()
    data = jsonio.algebra_to_json(g)
    assert data["schema"] == "tannaka-forge/1"
    back = jsonio.algebra_from_json(data)
    assert back == g
    # omitted pairs default to zero, antisymmetric completion applied
    sparse = {"schema": "tannaka-forge/1", "dim": 3, "basis": ["x", "y", "z"],
              "brackets": [{"i": 0, "j": 1, "value": ["0", "0", "1"]}]}
    h = jsonio.algebra_from_json(sparse)
    assert h == heisenberg()


def test_module_roundtrip():
    g = sl2()
    l2 = sl2_irreducible(g, 2)
    back = jsonio.module_from_json(g, jsonio.module_to_json(l2))
    assert back == l2


def test_module_json_rejects_bad_action():
    g = sl2()
    l1 = sl2_irreducible(g, 1)
    data = jsonio.module_to_json(l1)
    data["action"]["h"] = [["1", "0"], ["0", "1"]]
    with pytest.raises(ValueError):
        jsonio.module_from_json(g, data)


def test_dual_element_roundtrip_and_sorting():
    g = sl2()
    l1 = sl2_irreducible(g, 1)
    h = matrix_coefficient(l1, (1, 2), (3, 1), 3)
    data = jsonio.dual_element_to_json(h, g.basis_names)
    back = jsonio.dual_element_from_json(data, g.basis_names)
    assert back == h
    degrees = [sum(t["exp"].values()) for t in data["terms"]]
    assert degrees == sorted(degrees)


def test_family_roundtrip():
    fam = NatFamily({"a": QMatrix([[1, Fraction(1, 2)], [0, 1]]), "b": QMatrix([[3]])})
    back = jsonio.family_from_json(jsonio.family_to_json(fam))
    assert back == fam


def test_monoid_roundtrip():
    m = weight_monoid_from_generators([(1, 0), (0, 1), (1, 1)])
    back = jsonio.monoid_from_json(jsonio.monoid_to_json(m))
    assert back == m
    assert back.relations == m.relations


def test_words_roundtrip():
    words = [[], [("ue", Fraction(1, 2)), ("th", Fraction(3))]]
    data = jsonio.words_to_json(words)
    assert data == [[], [{"param_id": "ue", "value": "1/2"}, {"param_id": "th", "value": "3"}]]
    back = jsonio.words_from_json(data)
    assert back == [[], [("ue", Fraction(1, 2)), ("th", Fraction(3))]]


def test_canonical_json_sorted_and_stable():
    obj = {"b": 1, "a": [Fraction(1, 2).__str__()]}
    s1 = jsonio.canonical_json(obj)
    s2 = jsonio.canonical_json({"a": ["1/2"], "b": 1})
    assert s1 == s2
    assert s1.endswith("\n")
    assert json.loads(s1) == {"a": ["1/2"], "b": 1}
