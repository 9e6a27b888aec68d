"""Unipotent group law on a nilpotent Lie algebra via the truncated
Baker-Campbell-Hausdorff series, with the module filtrations and
annihilator ideals of a locally nilpotent subalgebra.

The series table is hard-coded through bracket degree 4 and validated in
the test suite against the matrix log of a product of exponentials; higher
classes are rejected rather than silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import QMatrix, Span, Vector, kernel_basis, vec_add, vec_is_zero, vec_scale, vector
from .liealg import LieAlgebraDesc, Subalgebra, bracket, lower_central_series
from .oneparam import exp_nilpotent
from .repn import ModuleDesc
from .tannaka import CategoryClosure

# (coefficient, letters): letters index into (x, y) and spell the
# right-nested bracket [l0, [l1, [... [l_{k-1}, l_k] ...]]]
DYNKIN_TERMS: dict[int, list[tuple[Fraction, tuple[int, ...]]]] = {
    1: [(Fraction(1), (0,)), (Fraction(1), (1,))],
    2: [(Fraction(1, 2), (0, 1))],
    3: [(Fraction(1, 12), (0, 0, 1)), (Fraction(-1, 12), (1, 0, 1))],
    4: [(Fraction(-1, 24), (1, 0, 0, 1))],
}

TABLE_DEPTH = max(DYNKIN_TERMS)


class NilpotencyClassError(ValueError):
    pass


@dataclass(frozen=True)
class BCHGroup:
    algebra: LieAlgebraDesc
    sub: Subalgebra
    nilpotency_class: int


def bch_group(g: LieAlgebraDesc, sub: Subalgebra | None = None) -> BCHGroup:
    """Certify nilpotency and the class bound before any group law runs."""
    if sub is None:
        from .liealg import full_subalgebra

        sub = full_subalgebra(g)
    series = lower_central_series(sub)
    if not series.is_nilpotent:
        raise NilpotencyClassError("algebra is not nilpotent")
    c = series.nilpotency_class
    if c > TABLE_DEPTH:
        raise NilpotencyClassError(
            f"nilpotency class {c} exceeds the series table depth {TABLE_DEPTH}"
        )
    return BCHGroup(algebra=g, sub=sub, nilpotency_class=c)


def _nested_bracket(g: LieAlgebraDesc, letters: tuple[int, ...], x: Vector, y: Vector) -> Vector:
    ops = [x if l == 0 else y for l in letters]
    acc = ops[-1]
    for v in reversed(ops[:-1]):
        acc = bracket(g, v, acc)
    return acc


def bch(group: BCHGroup, x: Sequence, y: Sequence) -> Vector:
    """Group law log(exp(x) exp(y)) through the certified class."""
    g = group.algebra
    x = vector(x)
    y = vector(y)
    span = Span(g.dim, group.sub.basis)
    if not (span.contains(x) and span.contains(y)):
        raise ValueError("arguments must lie in the group's subalgebra")
    out = tuple(Fraction(0) for _ in range(g.dim))
    for degree in range(1, group.nilpotency_class + 1):
        for coeff, letters in DYNKIN_TERMS.get(degree, []):
            term = _nested_bracket(g, letters, x, y)
            if not vec_is_zero(term):
                out = vec_add(out, vec_scale(coeff, term))
    return out


@dataclass(frozen=True)
class ModuleFiltration:
    module_id: str
    subspaces: tuple[tuple[Vector, ...], ...]  # V_0 subset ... subset V_k = V


class NonNilpotentActionError(ValueError):
    pass


def filtration(v_mod: ModuleDesc, sub: Subalgebra) -> ModuleFiltration:
    """V_k = vectors killed by every (k+1)-fold product from the subalgebra,
    computed as iterated kernels; requires the action to exhaust V."""
    mats = [v_mod.act(b) for b in sub.basis]
    d = v_mod.dim
    levels: list[tuple[Vector, ...]] = []
    current = Span(d)  # V_{-1} = 0
    while True:
        # next level: vectors v with m v in current for all m
        comp = _vanishing_functionals(current, d)
        rows = []
        for m in mats:
            for phi in comp:
                rows.append(
                    tuple(
                        sum((phi[i] * m.data[i][j] for i in range(d)), Fraction(0))
                        for j in range(d)
                    )
                )
        if rows:
            ker = kernel_basis(QMatrix(rows, cols=d))
        else:
            ker = [
                tuple(Fraction(1) if i == j else Fraction(0) for j in range(d))
                for i in range(d)
            ]
        nxt = Span(d, ker)
        levels.append(tuple(nxt.basis()))
        if nxt.rank == d:
            return ModuleFiltration(module_id=v_mod.mid, subspaces=tuple(levels))
        if nxt == current:
            raise NonNilpotentActionError(
                f"subalgebra does not act nilpotently on {v_mod.mid}"
            )
        current = nxt


def _vanishing_functionals(span: Span, dim: int) -> list[Vector]:
    """Basis of the functionals (standard pairing) vanishing on the span."""
    if span.rank == 0:
        return [
            tuple(Fraction(1) if j == i else Fraction(0) for j in range(dim))
            for i in range(dim)
        ]
    return kernel_basis(QMatrix(span.basis(), cols=dim))


def annihilator_ideal(
    closure: CategoryClosure, sub: Subalgebra, k: int
) -> list[Vector]:
    """I_k: elements of the subalgebra killing V_k of every closure object;
    returned as vectors in the parent algebra coordinates."""
    g = closure.algebra
    nb = len(sub.basis)
    rows: list[list[Fraction]] = []
    for obj in closure.objects:
        filt = filtration(obj.module, sub)
        if k < len(filt.subspaces):
            level = filt.subspaces[k]
        else:
            level = filt.subspaces[-1]
        mats = [obj.module.act(b) for b in sub.basis]
        for w in level:
            images = [m.apply(w) for m in mats]
            for coord in range(obj.module.dim):
                rows.append([images[t][coord] for t in range(nb)])
    if rows:
        ker = kernel_basis(QMatrix(rows, cols=nb))
    else:
        ker = [tuple(Fraction(1) if i == j else Fraction(0) for j in range(nb)) for i in range(nb)]
    out = []
    for c in ker:
        v = tuple(Fraction(0) for _ in range(g.dim))
        for coeff, b in zip(c, sub.basis):
            v = vec_add(v, vec_scale(coeff, b))
        out.append(v)
    return out


def exp_compat_check(
    group: BCHGroup, closure: CategoryClosure, x: Sequence, y: Sequence
) -> bool:
    """exp(rho(bch(x,y))) = exp(rho(x)) exp(rho(y)) on every closure object."""
    z = bch(group, x, y)
    for obj in closure.objects:
        mx = obj.module.act(x)
        my = obj.module.act(y)
        mz = obj.module.act(z)
        for m in (mx, my, mz):
            if obj.module.dim and not (m ** obj.module.dim).is_zero():
                raise NonNilpotentActionError(f"action not nilpotent on {obj.oid}")
        if exp_nilpotent(mz) != exp_nilpotent(mx) * exp_nilpotent(my):
            return False
    return True
