"""Bundled example algebras and modules: sl2, sl3, Heisenberg, 4x4 unitriangular."""

from __future__ import annotations

from fractions import Fraction

from .exactlin import QMatrix
from .liealg import LieAlgebraDesc, from_matrices, lie_algebra
from .repn import ModuleDesc, module


def sl2() -> LieAlgebraDesc:
    """Basis (e, f, h) with [e,f]=h, [h,e]=2e, [h,f]=-2f."""
    return lie_algebra(
        ["e", "f", "h"],
        {
            (0, 1): (0, 0, 1),
            (2, 0): (2, 0, 0),
            (2, 1): (0, -2, 0),
        },
    )


def sl2_irreducible(g: LieAlgebraDesc, n: int, mid: str | None = None) -> ModuleDesc:
    """The (n+1)-dimensional irreducible sl2 module L(n).

    Basis v_0..v_n with h v_k = (n-2k) v_k, f v_k = v_{k+1}, and
    e v_k = k(n+1-k) v_{k-1}.
    """
    d = n + 1
    e = [[Fraction(0)] * d for _ in range(d)]
    f = [[Fraction(0)] * d for _ in range(d)]
    h = [[Fraction(0)] * d for _ in range(d)]
    for k in range(d):
        h[k][k] = Fraction(n - 2 * k)
        if k + 1 < d:
            f[k + 1][k] = Fraction(1)
        if k > 0:
            e[k - 1][k] = Fraction(k * (n + 1 - k))
    if mid is None:
        mid = f"L{n}"
    return module(g, mid, (QMatrix(e), QMatrix(f), QMatrix(h)))


def heisenberg() -> LieAlgebraDesc:
    """Basis (x, y, z) with [x,y]=z, z central."""
    return lie_algebra(["x", "y", "z"], {(0, 1): (0, 0, 1)})


def heisenberg_standard(g: LieAlgebraDesc, mid: str = "std") -> ModuleDesc:
    """Faithful 3-dimensional module: x, y, z act by E12, E23, E13."""
    e12 = QMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    e23 = QMatrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
    e13 = QMatrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    return module(g, mid, (e12, e23, e13))


def _eij(n: int, i: int, j: int) -> QMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[i][j] = Fraction(1)
    return QMatrix(rows)


UT4_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def unitriangular4() -> LieAlgebraDesc:
    """Strictly upper triangular 4x4 matrices, basis E12..E34, class 3."""
    mats = [_eij(4, i, j) for i, j in UT4_PAIRS]
    names = [f"E{i + 1}{j + 1}" for i, j in UT4_PAIRS]
    return from_matrices(mats, names)


def unitriangular4_natural(g: LieAlgebraDesc, mid: str = "nat4") -> ModuleDesc:
    mats = [_eij(4, i, j) for i, j in UT4_PAIRS]
    return module(g, mid, tuple(mats))


def sl3() -> LieAlgebraDesc:
    """Traceless 3x3 matrices via the elementary/Cartan matrix basis."""
    mats = [
        _eij(3, 0, 1),
        _eij(3, 0, 2),
        _eij(3, 1, 2),
        _eij(3, 1, 0),
        _eij(3, 2, 0),
        _eij(3, 2, 1),
        _eij(3, 0, 0) - _eij(3, 1, 1),
        _eij(3, 1, 1) - _eij(3, 2, 2),
    ]
    names = ["e12", "e13", "e23", "e21", "e31", "e32", "h1", "h2"]
    return from_matrices(mats, names)


def sl3_natural(g: LieAlgebraDesc, mid: str = "nat3") -> ModuleDesc:
    mats = [
        _eij(3, 0, 1),
        _eij(3, 0, 2),
        _eij(3, 1, 2),
        _eij(3, 1, 0),
        _eij(3, 2, 0),
        _eij(3, 2, 1),
        _eij(3, 0, 0) - _eij(3, 1, 1),
        _eij(3, 1, 1) - _eij(3, 2, 2),
    ]
    return module(g, mid, tuple(mats))


def abelian(dim: int = 1) -> LieAlgebraDesc:
    return lie_algebra([f"a{i}" for i in range(dim)], {})


def abelian_line(g: LieAlgebraDesc, weights, mid: str | None = None) -> ModuleDesc:
    """One-dimensional module of an abelian algebra with the given weights."""
    weights = list(weights)
    if len(weights) != g.dim:
        raise ValueError("one weight per basis element")
    mats = tuple(QMatrix([[w]]) for w in weights)
    if mid is None:
        mid = "w(" + ",".join(str(w) for w in weights) + ")"
    return module(g, mid, mats)


BUILTIN_ALGEBRAS = {
    "sl2": sl2,
    "sl3": sl3,
    "heisenberg": heisenberg,
    "unitriangular4": unitriangular4,
}


def builtin_modules(name: str):
    """Default module set for a bundled algebra, as {id: ModuleDesc}."""
    if name == "sl2":
        g = sl2()
        return g, {
            "L0": sl2_irreducible(g, 0),
            "L1": sl2_irreducible(g, 1),
            "L2": sl2_irreducible(g, 2),
        }
    if name == "sl3":
        g = sl3()
        return g, {"nat3": sl3_natural(g)}
    if name == "heisenberg":
        g = heisenberg()
        return g, {"std": heisenberg_standard(g)}
    if name == "unitriangular4":
        g = unitriangular4()
        return g, {"nat4": unitriangular4_natural(g)}
    raise KeyError(f"no bundled algebra named {name!r}")
