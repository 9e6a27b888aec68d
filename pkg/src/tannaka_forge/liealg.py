"""Lie algebras over Q given by structure constants.

The structure table is the single internal representation; matrix Lie
algebras are ingested by bracketing the supplied matrices and solving for
the constants.  Antisymmetry and the Jacobi identity are checked exactly
on all basis triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import (
    QMatrix,
    Span,
    Vector,
    solve,
    vec_add,
    vec_is_zero,
    vec_scale,
    vector,
)


@dataclass(frozen=True)
class LieAlgebraDesc:
    """Basis-indexed structure constants: structure[i][j] = [a_i, a_j]."""

    dim: int
    basis_names: tuple[str, ...]
    structure: tuple[tuple[Vector, ...], ...]

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.structure[i][j]

    def basis_index(self, name: str) -> int:
        return self.basis_names.index(name)


Violation = tuple


def lie_algebra(basis_names: Sequence[str], brackets: dict) -> LieAlgebraDesc:
    """Build a description from sparse bracket data {(i, j): vector}.

    Omitted pairs default to zero; pairs given in one order are completed
    antisymmetrically.  Conflicting double entries raise.
    """
    n = len(basis_names)
    table = [[None] * n for _ in range(n)]
    for (i, j), value in brackets.items():
        v = vector(value)
        if len(v) != n:
            raise ValueError(f"bracket ({i},{j}) has wrong length")
        if table[i][j] is not None and table[i][j] != v:
            raise ValueError(f"conflicting entries for bracket ({i},{j})")
        table[i][j] = v
        neg = vec_scale(-1, v)
        if table[j][i] is None:
            table[j][i] = neg
        elif table[j][i] != neg and i != j:
            raise ValueError(f"entries for ({i},{j}) and ({j},{i}) are not antisymmetric")
    zero = vector([0] * n)
    structure = tuple(
        tuple(table[i][j] if table[i][j] is not None else zero for j in range(n))
        for i in range(n)
    )
    return LieAlgebraDesc(dim=n, basis_names=tuple(basis_names), structure=structure)


def validate(g: LieAlgebraDesc) -> list[Violation]:
    """All violated identities; empty list means the axioms hold exactly.

    Violations are ("antisymmetry", i, j) and ("jacobi", i, j, k).
    """
    out: list[Violation] = []
    n = g.dim
    for i in range(n):
        for j in range(i, n):
            lhs = g.structure[i][j]
            rhs = vec_scale(-1, g.structure[j][i])
            if lhs != rhs:
                out.append(("antisymmetry", i, j))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = _jacobi_sum(g, i, j, k)
                if not vec_is_zero(s):
                    out.append(("jacobi", i, j, k))
    return out


def _jacobi_sum(g: LieAlgebraDesc, i: int, j: int, k: int) -> Vector:
    ei = tuple(Fraction(1) if t == i else Fraction(0) for t in range(g.dim))
    ej = tuple(Fraction(1) if t == j else Fraction(0) for t in range(g.dim))
    ek = tuple(Fraction(1) if t == k else Fraction(0) for t in range(g.dim))
    s = bracket(g, bracket(g, ei, ej), ek)
    s = vec_add(s, bracket(g, bracket(g, ej, ek), ei))
    s = vec_add(s, bracket(g, bracket(g, ek, ei), ej))
    return s


def bracket(g: LieAlgebraDesc, x: Sequence, y: Sequence) -> Vector:
    """Bilinear extension of the structure table."""
    x = vector(x)
    y = vector(y)
    if len(x) != g.dim or len(y) != g.dim:
        raise ValueError("coefficient vector length mismatch")
    out = [Fraction(0)] * g.dim
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            c = xi * yj
            for t, s in enumerate(g.structure[i][j]):
                if s != 0:
                    out[t] += c * s
    return tuple(out)


def from_matrices(mats: Sequence[QMatrix], basis_names: Sequence[str] | None = None) -> LieAlgebraDesc:
    """Structure constants of the span of the given matrices.

    The matrices must be linearly independent and closed under commutator.
    """
    n = len(mats)
    if n == 0:
        raise ValueError("need at least one matrix")
    d = mats[0].rows
    if any(not m.is_square() or m.rows != d for m in mats):
        raise ValueError("matrices must be square and of equal size")
    flat = QMatrix.from_cols(
        [tuple(x for row in m.data for x in row) for m in mats]
    )
    span = Span(d * d, [tuple(x for row in m.data for x in row) for m in mats])
    if span.rank != n:
        raise ValueError("matrices are linearly dependent")
    if basis_names is None:
        basis_names = [f"a{i}" for i in range(n)]
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            comm = mats[i] * mats[j] - mats[j] * mats[i]
            target = tuple(x for row in comm.data for x in row)
            coeffs = solve(flat, target)
            if coeffs is None:
                raise ValueError(f"commutator of matrices {i},{j} leaves the span")
            brackets[(i, j)] = coeffs
    return lie_algebra(basis_names, brackets)


@dataclass(frozen=True)
class Subalgebra:
    """A bracket-closed span inside a parent algebra."""

    parent: LieAlgebraDesc
    basis: tuple[Vector, ...]


def subalgebra(g: LieAlgebraDesc, vectors: Sequence[Sequence]) -> Subalgebra:
    vecs = tuple(vector(v) for v in vectors)
    span = Span(g.dim, vecs)
    if span.rank != len(vecs):
        raise ValueError("spanning vectors are linearly dependent")
    for i, x in enumerate(vecs):
        for y in vecs[i:]:
            if not span.contains(bracket(g, x, y)):
                raise ValueError("span is not closed under the bracket")
    return Subalgebra(parent=g, basis=vecs)


def full_subalgebra(g: LieAlgebraDesc) -> Subalgebra:
    basis = tuple(
        tuple(Fraction(1) if j == i else Fraction(0) for j in range(g.dim))
        for i in range(g.dim)
    )
    return Subalgebra(parent=g, basis=basis)


@dataclass(frozen=True)
class LowerCentralSeries:
    terms: tuple[tuple[Vector, ...], ...]
    is_nilpotent: bool
    nilpotency_class: int | None


def lower_central_series(s: Subalgebra | LieAlgebraDesc) -> LowerCentralSeries:
    """Descending series l^0 = l, l^{k+1} = [l, l^k], run to stabilization.

    Stabilization is detected by span equality; nilpotency class c is the
    first index with l^c = 0.
    """
    if isinstance(s, LieAlgebraDesc):
        s = full_subalgebra(s)
    g = s.parent
    terms: list[tuple[Vector, ...]] = []
    current = Span(g.dim, s.basis)
    terms.append(tuple(current.basis()))
    while True:
        nxt = Span(g.dim)
        for x in s.basis:
            for y in current.basis():
                b = bracket(g, x, y)
                if not vec_is_zero(b):
                    nxt.add(b)
        if nxt == current:
            return LowerCentralSeries(tuple(terms), is_nilpotent=False, nilpotency_class=None)
        terms.append(tuple(nxt.basis()))
        if nxt.rank == 0:
            return LowerCentralSeries(
                tuple(terms), is_nilpotent=True, nilpotency_class=len(terms) - 1
            )
        current = nxt
