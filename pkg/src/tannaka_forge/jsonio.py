"""Canonical JSON serialization for every wire format.

Rationals travel as strings "p/q" ("p" when the denominator is 1); all
reports are dumped with sorted keys so identical inputs give byte-identical
output.  Every document carries the schema header "tannaka-forge/1".
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .exactlin import QMatrix, Vector, qstr, rat
from .liealg import LieAlgebraDesc, lie_algebra
from .repn import ModuleDesc, module
from .tannaka import NatFamily
from .toric import WeightMonoid, weight_monoid_from_generators
from .uea import TruncatedDualElement

SCHEMA = "tannaka-forge/1"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def rational_to_json(x) -> str:
    return qstr(x)


def rational_from_json(s) -> Fraction:
    if isinstance(s, bool):
        raise ValueError("booleans are not rationals")
    return rat(s)


def vector_to_json(v: Sequence) -> list[str]:
    return [qstr(x) for x in v]


def vector_from_json(data) -> Vector:
    return tuple(rational_from_json(x) for x in data)


def matrix_to_json(m: QMatrix) -> list[list[str]]:
    return [[qstr(x) for x in row] for row in m.data]


def matrix_from_json(data) -> QMatrix:
    if not isinstance(data, list) or not data:
        raise ValueError("matrix must be a non-empty list of rows")
    return QMatrix([[rational_from_json(x) for x in row] for row in data])


def algebra_to_json(g: LieAlgebraDesc) -> dict:
    brackets = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            value = g.structure[i][j]
            if any(c != 0 for c in value):
                brackets.append({"i": i, "j": j, "value": vector_to_json(value)})
    return {
        "schema": SCHEMA,
        "dim": g.dim,
        "basis": list(g.basis_names),
        "brackets": brackets,
    }


def algebra_from_json(data: dict) -> LieAlgebraDesc:
    names = data["basis"]
    if len(names) != data["dim"]:
        raise ValueError("dim does not match the basis list")
    brackets = {}
    for item in data.get("brackets", []):
        brackets[(item["i"], item["j"])] = vector_from_json(item["value"])
    return lie_algebra(names, brackets)


def module_to_json(v: ModuleDesc) -> dict:
    return {
        "schema": SCHEMA,
        "id": v.mid,
        "dim": v.dim,
        "action": {
            name: matrix_to_json(m)
            for name, m in zip(v.algebra.basis_names, v.action)
        },
    }


def module_from_json(g: LieAlgebraDesc, data: dict) -> ModuleDesc:
    mats = []
    for name in g.basis_names:
        if name not in data["action"]:
            raise ValueError(f"module lacks the action of basis element {name!r}")
        m = matrix_from_json(data["action"][name])
        if m.rows != data["dim"]:
            raise ValueError("action matrix size does not match dim")
        mats.append(m)
    return module(g, data["id"], tuple(mats))


def dual_element_to_json(h: TruncatedDualElement, basis_names: Sequence[str]) -> dict:
    terms = []
    for e, c in h.coeffs:
        terms.append(
            {
                "exp": {basis_names[i]: k for i, k in enumerate(e) if k},
                "coeff": qstr(c),
            }
        )
    return {"schema": SCHEMA, "bound": h.bound, "terms": terms}


def dual_element_from_json(data: dict, basis_names: Sequence[str]) -> TruncatedDualElement:
    n = len(basis_names)
    index = {name: i for i, name in enumerate(basis_names)}
    coeffs = {}
    for term in data["terms"]:
        e = [0] * n
        for name, k in term["exp"].items():
            e[index[name]] = int(k)
        coeffs[tuple(e)] = rational_from_json(term["coeff"])
    return TruncatedDualElement.make(n, data["bound"], coeffs)


def family_to_json(fam: NatFamily) -> dict:
    return {
        "schema": SCHEMA,
        "entries": {oid: matrix_to_json(m) for oid, m in fam.entries.items()},
    }


def family_from_json(data: dict) -> NatFamily:
    return NatFamily({oid: matrix_from_json(m) for oid, m in data["entries"].items()})


def words_to_json(words) -> list:
    """Word lists for the dense-submonoid generators: arrays of letters
    {param_id, value}, empty array = identity."""
    return [
        [{"param_id": pid, "value": qstr(value)} for pid, value in word]
        for word in words
    ]


def words_from_json(data) -> list[list[tuple[str, Fraction]]]:
    return [
        [(letter["param_id"], rational_from_json(letter["value"])) for letter in word]
        for word in data
    ]


def monoid_to_json(m: WeightMonoid) -> dict:
    return {
        "schema": SCHEMA,
        "rank": m.rank,
        "generators": [list(g) for g in m.generators],
        "denominator": m.denominator,
    }


def monoid_from_json(data: dict) -> WeightMonoid:
    gens = [tuple(int(x) for x in g) for g in data["generators"]]
    if any(len(g) != data["rank"] for g in gens):
        raise ValueError("generator rank mismatch")
    return weight_monoid_from_generators(gens, denominator=int(data.get("denominator", 1)))
