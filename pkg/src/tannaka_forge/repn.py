"""Finite-dimensional modules of a Lie algebra and their morphisms.

A module is one action matrix per Lie basis element; the bracket-commutator
identity is verified exactly on construction.  Tensor products use the
fixed Kronecker convention (first factor major): the pair (i, j) maps to
index i * dim(W) + j.  All constructions are deterministic so repeated
runs produce identical objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactlin import (
    QMatrix,
    Span,
    Vector,
    kernel_basis,
    solve,
    vector,
)
from .liealg import LieAlgebraDesc


@dataclass(frozen=True)
class ModuleDesc:
    mid: str
    dim: int
    action: tuple[QMatrix, ...]
    algebra: LieAlgebraDesc

    def act(self, x: Sequence) -> QMatrix:
        """Action matrix of the Lie element with coefficient vector x."""
        x = vector(x)
        out = QMatrix.zeros(self.dim, self.dim)
        for c, m in zip(x, self.action, strict=True):
            if c != 0:
                out = out + m.scale(c)
        return out

    def is_zero_action(self) -> bool:
        return all(m.is_zero() for m in self.action)


@dataclass(frozen=True)
class Morphism:
    source: str
    target: str
    matrix: QMatrix


def check_module(g: LieAlgebraDesc, mats: Sequence[QMatrix]) -> list[tuple[int, int]]:
    """Pairs (i, j) where rho([a_i,a_j]) != [rho(a_i), rho(a_j)]; empty = ok."""
    if len(mats) != g.dim:
        raise ValueError("need one action matrix per basis element")
    d = mats[0].rows if mats else 0
    for m in mats:
        if not m.is_square() or m.rows != d:
            raise ValueError("action matrices must be square and of equal size")
    bad = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            comm = mats[i] * mats[j] - mats[j] * mats[i]
            expected = QMatrix.zeros(d, d)
            for t, c in enumerate(g.structure[i][j]):
                if c != 0:
                    expected = expected + mats[t].scale(c)
            if comm != expected:
                bad.append((i, j))
    return bad


def module(g: LieAlgebraDesc, mid: str, mats: Sequence[QMatrix]) -> ModuleDesc:
    mats = tuple(mats)
    bad = check_module(g, mats)
    if bad:
        raise ValueError(f"not a module of the algebra; violations at pairs {bad}")
    dim = mats[0].rows if mats else 0
    return ModuleDesc(mid=mid, dim=dim, action=mats, algebra=g)


def trivial_module(g: LieAlgebraDesc, dim: int = 1, mid: str = "triv") -> ModuleDesc:
    mats = tuple(QMatrix.zeros(dim, dim) for _ in range(g.dim))
    return ModuleDesc(mid=mid, dim=dim, action=mats, algebra=g)


def tensor_module(v: ModuleDesc, w: ModuleDesc, mid: str | None = None) -> ModuleDesc:
    """Tensor product with action x (x) 1 + 1 (x) x."""
    if v.algebra is not w.algebra and v.algebra != w.algebra:
        raise ValueError("tensor factors have different parent algebras")
    iv = QMatrix.identity(v.dim)
    iw = QMatrix.identity(w.dim)
    mats = tuple(
        a.kron(iw) + iv.kron(b) for a, b in zip(v.action, w.action, strict=True)
    )
    if mid is None:
        mid = f"T({v.mid},{w.mid})"
    return ModuleDesc(mid=mid, dim=v.dim * w.dim, action=mats, algebra=v.algebra)


def direct_sum(v: ModuleDesc, w: ModuleDesc, mid: str | None = None) -> ModuleDesc:
    if v.algebra is not w.algebra and v.algebra != w.algebra:
        raise ValueError("summands have different parent algebras")
    d = v.dim + w.dim
    mats = []
    for a, b in zip(v.action, w.action, strict=True):
        rows = []
        for i in range(v.dim):
            rows.append(list(a.data[i]) + [Fraction(0)] * w.dim)
        for i in range(w.dim):
            rows.append([Fraction(0)] * v.dim + list(b.data[i]))
        mats.append(QMatrix(rows, cols=d))
    if mid is None:
        mid = f"S({v.mid},{w.mid})"
    return ModuleDesc(mid=mid, dim=d, action=tuple(mats), algebra=v.algebra)


def dual_module(v: ModuleDesc, mid: str | None = None) -> ModuleDesc:
    """Dual module with action -rho(a)^T."""
    mats = tuple(-(m.transpose()) for m in v.action)
    if mid is None:
        mid = f"D({v.mid})"
    return ModuleDesc(mid=mid, dim=v.dim, action=mats, algebra=v.algebra)


@dataclass(frozen=True)
class SubmoduleResult:
    basis: tuple[Vector, ...]
    module: ModuleDesc | None
    inclusion: Morphism | None


def submodule_generated(
    v: ModuleDesc, vectors: Iterable[Sequence], mid: str | None = None
) -> SubmoduleResult:
    """Smallest invariant subspace containing the vectors.

    Saturation is breadth-first over the basis actions, so the output basis
    (reduced echelon rows) is deterministic.  A zero-dimensional result is
    flagged by module=None.
    """
    span = Span(v.dim)
    queue = []
    for vec in vectors:
        vec = vector(vec)
        if span.add(vec):
            queue.append(vec)
    while queue:
        nxt = []
        for vec in queue:
            for m in v.action:
                img = m.apply(vec)
                if span.add(img):
                    nxt.append(img)
        queue = nxt
    basis = tuple(span.basis())
    if not basis:
        return SubmoduleResult(basis=(), module=None, inclusion=None)
    k = len(basis)
    inc = QMatrix.from_cols(basis)
    mats = []
    for m in v.action:
        cols = []
        for b in basis:
            img = m.apply(b)
            coeffs = solve(inc, img)
            if coeffs is None:
                raise AssertionError("saturated subspace not invariant")
            cols.append(coeffs)
        mats.append(QMatrix.from_cols(cols) if cols else QMatrix.zeros(k, k))
    if mid is None:
        mid = f"sub({v.mid})"
    sub = ModuleDesc(mid=mid, dim=k, action=tuple(mats), algebra=v.algebra)
    return SubmoduleResult(
        basis=basis,
        module=sub,
        inclusion=Morphism(source=mid, target=v.mid, matrix=inc),
    )


def hom_space(v: ModuleDesc, w: ModuleDesc) -> list[QMatrix]:
    """Basis of intertwiners A with A rho_V(a) = rho_W(a) A for all a.

    End_g(V) = hom_space(V, V); its dimension is the commutant dimension.
    """
    if v.algebra != w.algebra:
        raise ValueError("modules have different parent algebras")
    dv, dw = v.dim, w.dim
    nunk = dw * dv
    rows = []
    for a, b in zip(v.action, w.action, strict=True):
        # (A a - b A)[r, s'] = sum_s A[r,s] a[s,s'] - sum_r' b[r,r'] A[r',s']
        for r in range(dw):
            for s2 in range(dv):
                row = [Fraction(0)] * nunk
                for s in range(dv):
                    c = a.data[s][s2]
                    if c != 0:
                        row[r * dv + s] += c
                for r2 in range(dw):
                    c = b.data[r][r2]
                    if c != 0:
                        row[r2 * dv + s2] -= c
                if any(x != 0 for x in row):
                    rows.append(row)
    if not rows:
        ker = [tuple(Fraction(1) if i == j else Fraction(0) for j in range(nunk)) for i in range(nunk)]
    else:
        ker = kernel_basis(QMatrix(rows, cols=nunk))
    return [
        QMatrix([vecs[r * dv : (r + 1) * dv] for r in range(dw)], cols=dv)
        for vecs in ker
    ]


def is_invariant_subspace(
    v: ModuleDesc, subspace: Iterable[Sequence], actor=None
) -> bool:
    """True iff the actor maps the span into itself.

    actor=None uses the module's own Lie algebra action; otherwise actor is
    an iterable of matrices acting on V.
    """
    span = Span(v.dim, (vector(u) for u in subspace))
    mats = list(v.action) if actor is None else list(actor)
    for m in mats:
        for b in span.basis():
            if not span.contains(m.apply(b)):
                return False
    return True


@dataclass(frozen=True)
class IrreducibilityCertificate:
    irreducible: bool
    commutant_dim: int
    generated_all: tuple[bool, ...]


def irreducibility(v: ModuleDesc) -> IrreducibilityCertificate:
    """Certify irreducibility over Q.

    Criterion: End_g(V) is one-dimensional and every standard basis vector
    generates the whole module.  A one-dimensional commutant over Q gives
    absolute irreducibility, which the rank accounting downstream relies on.
    """
    comm = len(hom_space(v, v))
    flags = []
    for i in range(v.dim):
        e = tuple(Fraction(1) if j == i else Fraction(0) for j in range(v.dim))
        res = submodule_generated(v, [e])
        flags.append(len(res.basis) == v.dim)
    return IrreducibilityCertificate(
        irreducible=(comm == 1 and all(flags) and v.dim > 0),
        commutant_dim=comm,
        generated_all=tuple(flags),
    )
