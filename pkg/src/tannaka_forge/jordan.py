"""Exact Jordan-Chevalley decompositions over Q.

The additive decomposition x = s + n is computed by a Newton lift inside
Q[t]/(minpoly(x)): no factorization, no field extension.  The iterate is a
polynomial a(t) with a(x) = s, which doubles as the certificate that s and
n are polynomials in x.  The multiplicative variant works relative to a
supplied idempotent e and decomposes x = s u = u s on the image of e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    QMatrix,
    QPoly,
    Span,
    Vector,
    inverse,
    kernel_basis,
    minimal_polynomial,
    poly_xgcd,
    rank,
    solve,
    squarefree_part,
)


@dataclass(frozen=True)
class AdditiveJC:
    s: QMatrix
    n: QMatrix
    s_polynomial: QPoly  # s = s_polynomial(x); the commuting certificate


@dataclass(frozen=True)
class MultiplicativeJC:
    e: QMatrix
    s: QMatrix
    u: QMatrix


def additive_jc(x: QMatrix) -> AdditiveJC:
    """Unique decomposition x = s + n, s semisimple, n nilpotent, [s,n] = 0.

    Let p be the squarefree part of the minimal polynomial m of x and u an
    inverse of p' modulo p.  The Newton step a -> a - p(a) u(a) in Q[t]/(m)
    squares the ideal power of p(a), so at most ceil(log2(dim)) + 1 steps
    reach p(a) = 0 exactly.
    """
    if not x.is_square():
        raise ValueError("square matrix required")
    if x.rows == 0:
        return AdditiveJC(s=x, n=x, s_polynomial=QPoly.x())
    m = minimal_polynomial(x)
    p = squarefree_part(m)
    g, u, _ = poly_xgcd(p.derivative(), p)
    if g != QPoly.one():
        raise AssertionError("squarefree part not coprime to its derivative")
    a = QPoly.x() % m
    steps = 0
    limit = max(1, x.rows).bit_length() + 1
    while True:
        pa = p.compose_mod(a, m)
        if pa.is_zero():
            break
        if steps > limit:
            raise AssertionError("Newton lift failed to terminate")
        ua = u.compose_mod(a, m)
        a = (a - pa * ua) % m
        steps += 1
    s = a.eval_matrix(x)
    n = x - s
    return AdditiveJC(s=s, n=n, s_polynomial=a)


def is_nilpotent(x: QMatrix) -> bool:
    if not x.is_square():
        raise ValueError("square matrix required")
    return (x ** x.rows).is_zero() if x.rows else True


def is_semisimple(x: QMatrix) -> bool:
    p = minimal_polynomial(x)
    return squarefree_part(p) == p.monic()


def is_unipotent(x: QMatrix) -> bool:
    return is_nilpotent(x - QMatrix.identity(x.rows))


@dataclass(frozen=True)
class Classification:
    semisimple: bool
    nilpotent: bool
    unipotent: bool
    weak_locally_unipotent: bool


def _image_basis(x: QMatrix) -> list[Vector]:
    span = Span(x.rows)
    for j in range(x.cols):
        span.add(x.col(j))
    return span.basis()


def _restrict(x: QMatrix, basis: list[Vector]) -> QMatrix:
    """Matrix of x on the span of basis (which must be x-invariant)."""
    k = len(basis)
    if k == 0:
        return QMatrix.zeros(0, 0)
    b = QMatrix.from_cols(basis)
    cols = []
    for v in basis:
        coeffs = solve(b, x.apply(v))
        if coeffs is None:
            raise ValueError("subspace is not invariant")
        cols.append(coeffs)
    return QMatrix.from_cols(cols)


def is_weak_locally_unipotent(x: QMatrix) -> bool:
    """Kernel and image split the space and x is unipotent on the image."""
    if not x.is_square():
        raise ValueError("square matrix required")
    n = x.rows
    ker = kernel_basis(x)
    img = _image_basis(x)
    if len(ker) + len(img) != n:
        return False
    span = Span(n, ker)
    for v in img:
        if not span.add(v):
            return False
    if not img:
        return True
    return is_unipotent(_restrict(x, img))


def classify(x: QMatrix) -> Classification:
    return Classification(
        semisimple=is_semisimple(x),
        nilpotent=is_nilpotent(x),
        unipotent=is_unipotent(x),
        weak_locally_unipotent=is_weak_locally_unipotent(x),
    )


class SingularOnImageError(ValueError):
    """x is not invertible on the image of the idempotent."""

    def __init__(self, witness: Vector):
        self.witness = witness
        super().__init__(f"kernel witness on the idempotent image: {witness}")


def multiplicative_jc(x: QMatrix, e: QMatrix) -> MultiplicativeJC:
    """Decompose x = s u = u s in the corner monoid of the idempotent e.

    Requires e idempotent, x e = e x = x, and x invertible on image(e).
    s is semisimple, u is weak locally unipotent, both vanish on kernel(e).
    """
    if not (x.is_square() and e.is_square() and x.rows == e.rows):
        raise ValueError("x and e must be square of equal size")
    if e * e != e:
        raise ValueError("e is not idempotent")
    if x * e != x or e * x != x:
        raise ValueError("x does not lie in the corner of e")
    n = x.rows
    img = _image_basis(e)
    ker = kernel_basis(e)
    r = len(img)
    if r == 0:
        z = QMatrix.zeros(n, n)
        return MultiplicativeJC(e=e, s=z, u=z)
    cols = list(img) + list(ker)
    p = QMatrix.from_cols(cols)
    pinv = inverse(p)
    xr = _restrict(x, img)
    ker_xr = kernel_basis(xr)
    if ker_xr:
        witness = QMatrix.from_cols(img).apply(ker_xr[0])
        raise SingularOnImageError(witness)
    dec = additive_jc(xr)
    s0, n0 = dec.s, dec.n
    u0 = inverse(s0) * xr

    def extend(block: QMatrix) -> QMatrix:
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                row.append(block.data[i][j] if i < r and j < r else Fraction(0))
            rows.append(row)
        return p * QMatrix(rows, cols=n) * pinv

    s = extend(s0)
    u = extend(u0)
    assert s * u == x and u * s == x
    assert s * e == s and e * s == s and u * e == u and e * u == u
    return MultiplicativeJC(e=e, s=s, u=u)


def tensor_jc_check(x: QMatrix, y: QMatrix) -> bool:
    """Tensor compatibility of both decompositions.

    Additive: the decomposition of x (x) 1 + 1 (x) y is
    (s_x (x) 1 + 1 (x) s_y, n_x (x) 1 + 1 (x) n_y).  Multiplicative, for
    invertible x, y with e = 1: the decomposition of x (x) y is
    (s_x (x) s_y, u_x (x) u_y).
    """
    if not (x.is_square() and y.is_square()):
        raise ValueError("square matrices required")
    ix = QMatrix.identity(x.rows)
    iy = QMatrix.identity(y.rows)
    dx = additive_jc(x)
    dy = additive_jc(y)
    big = x.kron(iy) + ix.kron(y)
    dbig = additive_jc(big)
    ok_add = (
        dbig.s == dx.s.kron(iy) + ix.kron(dy.s)
        and dbig.n == dx.n.kron(iy) + ix.kron(dy.n)
    )
    if not ok_add:
        return False
    if rank(x) == x.rows and rank(y) == y.rows:
        mx = multiplicative_jc(x, ix)
        my = multiplicative_jc(y, iy)
        mbig = multiplicative_jc(x.kron(y), ix.kron(iy))
        if mbig.s != mx.s.kron(my.s) or mbig.u != mx.u.kron(my.u):
            return False
    return True
