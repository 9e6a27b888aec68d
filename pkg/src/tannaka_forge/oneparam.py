"""One-parameter monoid elements: exp(t x) for nilpotent actors and s^h for
integer-diagonalizable actors, plus word generation of the submonoid they
span.

Exponentials are finite sums (nilpotency is certified per object before
anything is exponentiated); torus elements are built from exact eigenspace
projectors, so non-split or non-integer spectra are rejected instead of
being approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactlin import (
    QMatrix,
    QPoly,
    Vector,
    minimal_polynomial,
    rat,
    squarefree_part,
    vec_dot,
    vector,
)
from .repn import ModuleDesc
from .tannaka import CategoryClosure, NatFamily, family_compose, identity_family, m_membership


class NotNilpotentError(ValueError):
    def __init__(self, oid: str):
        self.object_id = oid
        super().__init__(f"action is not nilpotent on object {oid}")


class NotTorusDiagonalError(ValueError):
    def __init__(self, oid: str, reason: str):
        self.object_id = oid
        super().__init__(f"object {oid}: {reason}")


@dataclass(frozen=True)
class UnipotentParam:
    pid: str
    generator: Vector


@dataclass(frozen=True)
class TorusParam:
    pid: str
    generator: Vector


def exp_nilpotent(x: QMatrix, t=Fraction(1)) -> QMatrix:
    """Finite exponential sum of a nilpotent matrix."""
    t = rat(t)
    n = x.rows
    out = QMatrix.identity(n)
    term = QMatrix.identity(n)
    for k in range(1, n + 1):
        term = (term * x).scale(t / k)
        if term.is_zero():
            break
        out = out + term
    return out


def log_unipotent(u: QMatrix) -> QMatrix:
    """Finite logarithm of a unipotent matrix (u - 1 nilpotent)."""
    n = u.rows
    z = u - QMatrix.identity(n)
    out = QMatrix.zeros(n, n)
    term = QMatrix.identity(n)
    for k in range(1, n + 1):
        term = term * z
        if term.is_zero():
            break
        out = out + term.scale(Fraction((-1) ** (k + 1), k))
    return out


def exp_family(closure: CategoryClosure, x: Sequence, t) -> NatFamily:
    """exp(t rho_V(x)) on every object; rejects non-nilpotent actions."""
    x = vector(x)
    t = rat(t)
    entries = {}
    for obj in closure.objects:
        m = obj.module.act(x)
        if obj.module.dim and not (m ** obj.module.dim).is_zero():
            raise NotNilpotentError(obj.oid)
        entries[obj.oid] = exp_nilpotent(m, t)
    fam = NatFamily(entries)
    res = m_membership(closure, fam)
    if not res.ok:
        raise AssertionError(f"exponential family failed certification: {res.violations}")
    return fam


def mc_restrict_unipotent(v_mod: ModuleDesc, phi: Sequence, v: Sequence, x: Sequence) -> QPoly:
    """The matrix coefficient restricted to the line through a nilpotent x,
    as a polynomial in the coordinate tau: coefficients phi(x^k v / k!)."""
    phi = vector(phi)
    vec = vector(v)
    m = v_mod.act(x)
    if not (m ** v_mod.dim).is_zero():
        raise NotNilpotentError(v_mod.mid)
    coeffs = []
    fact = Fraction(1)
    current = vec
    for k in range(v_mod.dim + 1):
        coeffs.append(vec_dot(phi, current) / fact)
        current = m.apply(current)
        fact *= k + 1
        if all(c == 0 for c in current):
            coeffs.append(vec_dot(phi, current))
            break
    return QPoly(coeffs)


def integer_eigendata(m: QMatrix, oid: str = "?") -> list[tuple[int, QMatrix]]:
    """Exact (eigenvalue, projector) pairs for a matrix that is
    diagonalizable with integer eigenvalues; rejects everything else.

    Projectors come from Lagrange interpolation on the squarefree minimal
    polynomial, so they are exact and sum to the identity.
    """
    p = minimal_polynomial(m)
    if squarefree_part(p) != p.monic():
        raise NotTorusDiagonalError(oid, "action is not diagonalizable")
    # all roots must be integers: deflate by integer roots found by divisor search
    roots: list[int] = []
    q = p.monic()
    while q.degree > 0:
        c0 = q.coeffs[0]
        found = None
        if c0 == 0:
            found = 0
        else:
            if any(c.denominator != 1 for c in q.coeffs):
                # monic with a non-integer coefficient cannot split over Z
                raise NotTorusDiagonalError(oid, "spectrum is not integral")
            cands = set()
            a0 = abs(int(c0))
            d = 1
            while d * d <= a0:
                if a0 % d == 0:
                    cands.update({d, -d, a0 // d, -(a0 // d)})
                d += 1
            for cand in sorted(cands):
                if q.eval_scalar(cand) == 0:
                    found = cand
                    break
        if found is None:
            raise NotTorusDiagonalError(oid, "spectrum is not integral")
        roots.append(found)
        q = q // QPoly([-found, 1])
    roots.sort()
    out = []
    n = m.rows
    for z in roots:
        proj = QMatrix.identity(n)
        for w in roots:
            if w == z:
                continue
            proj = proj * (m - QMatrix.identity(n).scale(w))
            proj = proj.scale(Fraction(1, z - w))
        out.append((z, proj))
    total = QMatrix.zeros(n, n)
    for _, proj in out:
        total = total + proj
    if total != QMatrix.identity(n):
        raise AssertionError("eigenprojectors do not resolve the identity")
    return out


def torus_matrix(m: QMatrix, s, oid: str = "?") -> QMatrix:
    s = rat(s)
    if s == 0:
        raise ValueError("torus parameter must be nonzero")
    out = QMatrix.zeros(m.rows, m.rows)
    for z, proj in integer_eigendata(m, oid):
        out = out + proj.scale(s ** z)
    return out


def torus_family(closure: CategoryClosure, h: Sequence, s) -> NatFamily:
    """s^{rho_V(h)} on every object; rejects non-integral spectra."""
    h = vector(h)
    s = rat(s)
    entries = {}
    for obj in closure.objects:
        entries[obj.oid] = torus_matrix(obj.module.act(h), s, obj.oid)
    fam = NatFamily(entries)
    res = m_membership(closure, fam)
    if not res.ok:
        raise AssertionError(f"torus family failed certification: {res.violations}")
    return fam


def eigenvalue_monoid(closure: CategoryClosure, h: Sequence) -> list[int]:
    """Sorted set of all integer eigenvalues of the h-action over the
    closure; 0 is always present through the trivial object."""
    h = vector(h)
    values: set[int] = set()
    for obj in closure.objects:
        for z, _ in integer_eigendata(obj.module.act(h), obj.oid):
            values.add(z)
    return sorted(values)


def torus_comorphism_support(
    v_mod: ModuleDesc, phi: Sequence, v: Sequence, h: Sequence
) -> dict[int, Fraction]:
    """Coefficients c_b of the pullback of a matrix coefficient through the
    torus map: f(s) = sum_b c_b s^b, keyed by eigenvalue b."""
    phi = vector(phi)
    vec = vector(v)
    out: dict[int, Fraction] = {}
    for z, proj in integer_eigendata(v_mod.act(h), v_mod.mid):
        c = vec_dot(phi, proj.apply(vec))
        if c != 0:
            out[z] = c
    return out


def conjugation_check(closure: CategoryClosure, mfam: NatFamily, x: Sequence) -> bool:
    """m exp(x) m^{-1} = exp(m.x), where (m.x)_V = m_V rho_V(x) m_V^{-1}."""
    from .exactlin import inverse

    x = vector(x)
    for obj in closure.objects:
        m = mfam.entries[obj.oid]
        minv = inverse(m)
        rx = obj.module.act(x)
        conj = m * rx * minv
        if obj.module.dim and not (conj ** obj.module.dim).is_zero():
            raise NotNilpotentError(obj.oid)
        lhs = m * exp_nilpotent(rx) * minv
        rhs = exp_nilpotent(conj)
        if lhs != rhs:
            return False
    return True


Word = tuple[tuple[str, Fraction], ...]


def instantiate_param(closure: CategoryClosure, param, value) -> NatFamily:
    if isinstance(param, UnipotentParam):
        return exp_family(closure, param.generator, value)
    if isinstance(param, TorusParam):
        return torus_family(closure, param.generator, value)
    raise TypeError("param must be UnipotentParam or TorusParam")


def generate_me(
    closure: CategoryClosure,
    params: Sequence,
    words: Iterable[Sequence[tuple[str, object]]],
    certify: bool = True,
) -> list[tuple[Word, NatFamily]]:
    """Evaluate explicit words in the parameters; the empty word gives the
    identity.  Each word is a sequence of (param id, value) letters, applied
    left to right; every output is certified as a monoid element."""
    by_id = {p.pid: p for p in params}
    cache: dict[tuple[str, Fraction], NatFamily] = {}
    out = []
    for word in words:
        fam = identity_family(closure)
        norm: list[tuple[str, Fraction]] = []
        for pid, value in word:
            value = rat(value)
            norm.append((pid, value))
            key = (pid, value)
            if key not in cache:
                cache[key] = instantiate_param(closure, by_id[pid], value)
            fam = family_compose(fam, cache[key])
        if certify:
            res = m_membership(closure, fam)
            if not res.ok:
                raise AssertionError(f"word {norm} failed certification: {res.violations}")
        out.append((tuple(norm), fam))
    return out


def all_words(letters: Sequence[tuple[str, object]], max_length: int) -> list[list[tuple[str, object]]]:
    """All words over the instantiated letters up to a length bound,
    including the empty word, in deterministic order."""
    out: list[list[tuple[str, object]]] = [[]]
    layer: list[list[tuple[str, object]]] = [[]]
    for _ in range(max_length):
        nxt = []
        for w in layer:
            for letter in letters:
                nw = w + [letter]
                nxt.append(nw)
        out.extend(nxt)
        layer = nxt
    return out
