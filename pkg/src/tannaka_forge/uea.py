"""Degree-truncated machinery on the enveloping algebra and its dual.

PBW monomials carry divided powers over the fixed total basis order (the
input order of the Lie basis), so the coproduct splits additively in
exponents and the convolution product on the truncated dual is plain
coefficient convolution over exponent splittings.  All identities are
exact below the truncation bound.

Multi-indices are dense exponent tuples, one slot per Lie basis element;
the canonical iteration order is graded lexicographic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactlin import QMatrix, Vector, rat, vec_dot, vector
from .repn import ModuleDesc

MultiIndex = tuple[int, ...]


def mi_zero(nvars: int) -> MultiIndex:
    return (0,) * nvars


def mi_degree(e: MultiIndex) -> int:
    return sum(e)


def mi_add(e: MultiIndex, f: MultiIndex) -> MultiIndex:
    return tuple(a + b for a, b in zip(e, f, strict=True))


def mi_support(e: MultiIndex) -> tuple[int, ...]:
    return tuple(i for i, a in enumerate(e) if a)


def monomials_upto(nvars: int, bound: int) -> list[MultiIndex]:
    """All exponent tuples of degree <= bound in graded lex order."""
    out: list[MultiIndex] = []
    for deg in range(bound + 1):
        out.extend(_monomials_of_degree(nvars, deg))
    return out


def _monomials_of_degree(nvars: int, deg: int) -> list[MultiIndex]:
    if nvars == 0:
        return [()] if deg == 0 else []
    out = []
    for first in range(deg, -1, -1):
        for rest in _monomials_of_degree(nvars - 1, deg - first):
            out.append((first,) + rest)
    return out


def coproduct_pbw(f: MultiIndex) -> list[tuple[MultiIndex, MultiIndex]]:
    """All ordered splittings e + e' = f, each with coefficient 1.

    Divided powers absorb the binomial coefficients, so the coproduct of a
    PBW monomial is the plain sum over splittings.
    """
    ranges = [range(a + 1) for a in f]
    out = []
    for choice in itertools.product(*ranges):
        e = tuple(choice)
        out.append((e, tuple(a - b for a, b in zip(f, e))))
    return out


def apply_pbw(v_mod: ModuleDesc, e: MultiIndex, v: Sequence) -> Vector:
    """Apply the divided-power monomial to a vector.

    Factors follow the global basis order with the rightmost (largest
    index) factor acting first.
    """
    if len(e) != v_mod.algebra.dim:
        raise ValueError("exponent length does not match the Lie basis")
    vec = vector(v)
    if len(vec) != v_mod.dim:
        raise ValueError("vector length does not match the module")
    for i in range(len(e) - 1, -1, -1):
        for k in range(1, e[i] + 1):
            vec = tuple(x / k for x in v_mod.action[i].apply(vec))
    return vec


def apply_word(v_mod: ModuleDesc, word: Sequence[tuple[int, int]], v: Sequence) -> Vector:
    """Apply a word of (basis index, power) factors, rightmost first.

    Divided-power normalization matches apply_pbw factor by factor, but the
    word order is arbitrary; no straightening happens.
    """
    vec = vector(v)
    for i, power in reversed(list(word)):
        for k in range(1, power + 1):
            vec = tuple(x / k for x in v_mod.action[i].apply(vec))
    return vec


def pbw_vector_table(v_mod: ModuleDesc, v: Sequence, bound: int) -> dict[MultiIndex, Vector]:
    """b_e v for all monomials of degree <= bound, by graded recursion."""
    n = v_mod.algebra.dim
    table: dict[MultiIndex, Vector] = {mi_zero(n): vector(v)}
    for e in monomials_upto(n, bound):
        if e in table:
            continue
        j = min(mi_support(e))
        prev = list(e)
        prev[j] -= 1
        base = table[tuple(prev)]
        k = e[j]
        table[e] = tuple(x / k for x in v_mod.action[j].apply(base))
    return table


def pbw_matrix_table(v_mod: ModuleDesc, bound: int) -> dict[MultiIndex, QMatrix]:
    """Action matrices of b_e for all monomials of degree <= bound."""
    n = v_mod.algebra.dim
    table: dict[MultiIndex, QMatrix] = {mi_zero(n): QMatrix.identity(v_mod.dim)}
    for e in monomials_upto(n, bound):
        if e in table:
            continue
        j = min(mi_support(e))
        prev = list(e)
        prev[j] -= 1
        table[e] = (v_mod.action[j] * table[tuple(prev)]).scale(Fraction(1, e[j]))
    return table


@dataclass(frozen=True)
class TruncatedDualElement:
    """Element of the dual of U(g) up to PBW degree `bound`.

    coeffs holds no zero values and no index of degree > bound.
    """

    nvars: int
    bound: int
    coeffs: tuple[tuple[MultiIndex, Fraction], ...]

    @classmethod
    def make(cls, nvars: int, bound: int, coeffs: dict | Iterable) -> "TruncatedDualElement":
        items = dict(coeffs)
        clean = {}
        for e, c in items.items():
            e = tuple(e)
            c = rat(c)
            if len(e) != nvars:
                raise ValueError("exponent length mismatch")
            if mi_degree(e) > bound:
                raise ValueError("exponent degree exceeds the bound")
            if c != 0:
                clean[e] = c
        ordered = tuple(sorted(clean.items(), key=lambda t: (mi_degree(t[0]), t[0])))
        return cls(nvars=nvars, bound=bound, coeffs=ordered)

    def coeff(self, e: MultiIndex) -> Fraction:
        for f, c in self.coeffs:
            if f == e:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[MultiIndex, Fraction]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs


def counit(nvars: int, bound: int) -> TruncatedDualElement:
    """The unit of the convolution algebra: 1 at the zero exponent."""
    return TruncatedDualElement.make(nvars, bound, {mi_zero(nvars): Fraction(1)})


def dual_add(h: TruncatedDualElement, g: TruncatedDualElement) -> TruncatedDualElement:
    if h.nvars != g.nvars or h.bound != g.bound:
        raise ValueError("mismatched truncated duals")
    out = dict(h.coeffs)
    for e, c in g.coeffs:
        out[e] = out.get(e, Fraction(0)) + c
    return TruncatedDualElement.make(h.nvars, h.bound, out)


def dual_scale(c, h: TruncatedDualElement) -> TruncatedDualElement:
    c = rat(c)
    return TruncatedDualElement.make(h.nvars, h.bound, {e: c * x for e, x in h.coeffs})


def dual_multiply(h: TruncatedDualElement, g: TruncatedDualElement) -> TruncatedDualElement:
    """Convolution over exponent splittings, truncated at the shared bound."""
    if h.nvars != g.nvars:
        raise ValueError("mismatched variable counts")
    if h.bound != g.bound:
        raise ValueError("mismatched truncation bounds")
    bound = h.bound
    out: dict[MultiIndex, Fraction] = {}
    for e, c in h.coeffs:
        de = mi_degree(e)
        for f, d in g.coeffs:
            if de + mi_degree(f) > bound:
                continue
            s = mi_add(e, f)
            out[s] = out.get(s, Fraction(0)) + c * d
    return TruncatedDualElement.make(h.nvars, bound, out)


def valuation(h: TruncatedDualElement) -> int | None:
    """Minimal degree in the support; None marks the zero element (+infinity)."""
    if not h.coeffs:
        return None
    return min(mi_degree(e) for e, _ in h.coeffs)


def matrix_coefficient(
    v_mod: ModuleDesc, phi: Sequence, v: Sequence, bound: int
) -> TruncatedDualElement:
    """The function b_e -> phi(b_e v) on monomials of degree <= bound."""
    phi = vector(phi)
    if len(phi) != v_mod.dim:
        raise ValueError("covector length mismatch")
    table = pbw_vector_table(v_mod, v, bound)
    coeffs = {e: vec_dot(phi, vec) for e, vec in table.items()}
    return TruncatedDualElement.make(v_mod.algebra.dim, bound, coeffs)


def antipode_on_generator(x: Sequence) -> Vector:
    """The antipode on Lie generators only: x -> -x."""
    return tuple(-c for c in vector(x))
