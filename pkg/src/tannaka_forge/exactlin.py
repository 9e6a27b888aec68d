"""Exact rational linear algebra: dense matrices and polynomials over Q.

Everything runs on fractions.Fraction, so all arithmetic is exact and all
results are bit-reproducible.  Matrices are dense and small (desk scale,
well below 200x200).  Elimination works on integer-scaled rows with eager
content (gcd) normalization, which keeps coefficients tame without the
bookkeeping of a full fraction-free scheme.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Q = Fraction

Vector = tuple[Fraction, ...]


def rat(x) -> Fraction:
    """Coerce ints, strings like '2/3', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def qstr(x) -> str:
    """Canonical string form of a rational: 'p/q', or 'p' when q = 1."""
    return str(Fraction(x))


def vector(entries: Iterable) -> Vector:
    return tuple(rat(x) for x in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v: Vector) -> Vector:
    c = rat(c)
    return tuple(c * a for a in v)


def vec_dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def vec_is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


class QMatrix:
    """Immutable dense matrix over Q, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols: int | None = None):
        rows = tuple(tuple(rat(x) for x in row) for row in data)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            ncols = cols
        object.__setattr__(self, "data", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)

    def __setattr__(self, *args):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(
            [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)],
            cols=n,
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_cols(cls, cols: Sequence[Vector]) -> "QMatrix":
        if not cols:
            raise ValueError("from_cols needs at least one column")
        n = len(cols[0])
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, QMatrix)
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(qstr(x) for x in row) for row in self.data)
        return f"QMatrix[{self.rows}x{self.cols}: {body}]"

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            cols=self.cols,
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            cols=self.cols,
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-a for a in row] for row in self.data], cols=self.cols)

    def __mul__(self, other):
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
            bt = other.transpose().data
            return QMatrix(
                [[vec_dot(row, col) for col in bt] for row in self.data],
                cols=other.cols,
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "QMatrix":
        c = rat(c)
        return QMatrix([[c * a for a in row] for row in self.data], cols=self.cols)

    def __pow__(self, k: int) -> "QMatrix":
        if self.rows != self.cols:
            raise ValueError("power of non-square matrix")
        out = QMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def _same_shape(self, other: "QMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def transpose(self) -> "QMatrix":
        return QMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def apply(self, v: Sequence) -> Vector:
        v = vector(v)
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(vec_dot(row, v) for row in self.data)

    def row(self, i: int) -> Vector:
        return self.data[i]

    def col(self, j: int) -> Vector:
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def kron(self, other: "QMatrix") -> "QMatrix":
        """Kronecker product, first factor major: (i,j)->(i*other.rows+j)."""
        out = []
        for i in range(self.rows):
            for p in range(other.rows):
                row = []
                for j in range(self.cols):
                    a = self.data[i][j]
                    row.extend(a * b for b in other.data[p])
                out.append(row)
        return QMatrix(out, cols=self.cols * other.cols)

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.data for a in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.data]

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows:
            raise ValueError("hstack row mismatch")
        return QMatrix(
            [list(a) + list(b) for a, b in zip(self.data, other.data)],
            cols=self.cols + other.cols,
        )


# ---------------------------------------------------------------------------
# Elimination core.  Rows are scaled to primitive integer vectors and reduced
# with integer cross-multiplication; the content gcd is divided out after
# every combination step.

def _primitive_int_row(row: Sequence[Fraction]) -> list[int]:
    den = 1
    for x in row:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    return ints


def _int_echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Forward elimination over Z. Returns echelon rows and pivot columns.

    Pivot choice is the first row with a nonzero entry in the current
    column, so the result is deterministic.
    """
    work = [r for r in rows if any(r)]
    pivots: list[int] = []
    out: list[list[int]] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        if prow[c] < 0:
            prow = [-a for a in prow]
            work[r] = prow
        p = prow[c]
        for i in range(r + 1, len(work)):
            a = work[i][c]
            if a == 0:
                continue
            row = work[i]
            new = [p * x - a * y for x, y in zip(row, prow)]
            g = 0
            for v in new:
                g = gcd(g, v)
            if g > 1:
                new = [v // g for v in new]
            work[i] = new
        out.append(prow)
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return out, pivots


def _fraction_rows(m) -> tuple[list[list[int]], int]:
    if isinstance(m, QMatrix):
        rows = [list(r) for r in m.data]
        ncols = m.cols
    else:
        rows = [list(vector(r)) for r in m]
        ncols = len(rows[0]) if rows else 0
    return [_primitive_int_row(r) for r in rows], ncols


def rref(m) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form (monic pivots) and pivot column list."""
    int_rows, ncols = _fraction_rows(m)
    ech, pivots = _int_echelon(int_rows, ncols)
    reduced = [[Fraction(x) for x in row] for row in ech]
    for i in range(len(reduced) - 1, -1, -1):
        c = pivots[i]
        p = reduced[i][c]
        reduced[i] = [x / p for x in reduced[i]]
        for k in range(i):
            a = reduced[k][c]
            if a != 0:
                reduced[k] = [x - a * y for x, y in zip(reduced[k], reduced[i])]
    return [tuple(r) for r in reduced], pivots


def rank(m) -> int:
    int_rows, ncols = _fraction_rows(m)
    _, pivots = _int_echelon(int_rows, ncols)
    return len(pivots)


def kernel_basis(m) -> list[Vector]:
    """Basis of the right null space; empty iff rank = cols.

    Basis vectors carry a 1 in their free column and are listed by
    ascending free column, which makes the output canonical.
    """
    reduced, pivots = rref(m)
    if isinstance(m, QMatrix):
        ncols = m.cols
    else:
        rows = list(m)
        ncols = len(rows[0]) if rows else 0
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -reduced[i][f]
        basis.append(tuple(v))
    return basis


def solve(a: QMatrix, b: Sequence) -> Vector | None:
    """One solution of a x = b (free variables set to 0), or None."""
    b = vector(b)
    if len(b) != a.rows:
        raise ValueError("rhs length mismatch")
    aug = QMatrix([list(row) + [bb] for row, bb in zip(a.data, b)], cols=a.cols + 1)
    reduced, pivots = rref(aug)
    if a.cols in pivots:
        return None
    x = [Fraction(0)] * a.cols
    for i, c in enumerate(pivots):
        x[c] = reduced[i][a.cols]
    return tuple(x)


def inverse(a: QMatrix) -> QMatrix:
    if not a.is_square():
        raise ValueError("inverse of non-square matrix")
    n = a.rows
    aug = a.hstack(QMatrix.identity(n))
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return QMatrix([row[n:] for row in reduced[:n]], cols=n)


def is_invertible(a: QMatrix) -> bool:
    return a.is_square() and rank(a) == a.rows


def left_inverse(a: QMatrix) -> QMatrix:
    """L with L a = I for a matrix of full column rank."""
    gram = a.transpose() * a
    return inverse(gram) * a.transpose()


class Span:
    """Incrementally built subspace with canonical reduced echelon rows."""

    def __init__(self, dim: int, vectors: Iterable = ()):  # dim = ambient dim
        self.dim = dim
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []
        for v in vectors:
            self.add(v)

    def _reduce(self, v: Sequence) -> list[Fraction]:
        w = list(vector(v))
        if len(w) != self.dim:
            raise ValueError("vector length mismatch")
        for row, c in zip(self._rows, self._pivots):
            a = w[c]
            if a != 0:
                w = [x - a * y for x, y in zip(w, row)]
        return w

    def add(self, v: Sequence) -> bool:
        """Insert v; True iff the span grew."""
        w = self._reduce(v)
        c = next((i for i, x in enumerate(w) if x != 0), None)
        if c is None:
            return False
        p = w[c]
        w = [x / p for x in w]
        pos = 0
        while pos < len(self._pivots) and self._pivots[pos] < c:
            pos += 1
        self._rows.insert(pos, w)
        self._pivots.insert(pos, c)
        for i in range(len(self._rows)):
            if i == pos:
                continue
            a = self._rows[i][c]
            if a != 0:
                self._rows[i] = [x - a * y for x, y in zip(self._rows[i], w)]
        return True

    def contains(self, v: Sequence) -> bool:
        return all(x == 0 for x in self._reduce(v))

    def residue(self, v: Sequence) -> Vector:
        return tuple(self._reduce(v))

    @property
    def rank(self) -> int:
        return len(self._rows)

    def basis(self) -> list[Vector]:
        return [tuple(r) for r in self._rows]

    def __eq__(self, other):
        return (
            isinstance(other, Span)
            and self.dim == other.dim
            and self._pivots == other._pivots
            and self._rows == other._rows
        )

    def __contains__(self, v) -> bool:
        return self.contains(v)


# ---------------------------------------------------------------------------
# Polynomials over Q, coefficients ascending.

class QPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def zero(cls) -> "QPoly":
        return cls([])

    @classmethod
    def one(cls) -> "QPoly":
        return cls([1])

    @classmethod
    def x(cls) -> "QPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "QPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        return QPoly([c / lead for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "QPoly[0]"
        terms = [f"{qstr(c)}*t^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return "QPoly[" + " + ".join(terms) + "]"

    def __add__(self, other: "QPoly") -> "QPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return QPoly([x + y for x, y in zip(a, b)])

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, QPoly):
            if self.is_zero() or other.is_zero():
                return QPoly.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return QPoly(out)
        c = rat(other)
        return QPoly([c * a for a in self.coeffs])

    def __rmul__(self, other):
        return self * other

    def __divmod__(self, other: "QPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dq = len(rem) - len(div)
        if dq < 0:
            return QPoly.zero(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = div[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(div) - 1] / lead
            quo[k] = c
            if c != 0:
                for i, d in enumerate(div):
                    rem[k + i] -= c * d
        return QPoly(quo), QPoly(rem)

    def __mod__(self, other: "QPoly") -> "QPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "QPoly") -> "QPoly":
        return divmod(self, other)[0]

    def derivative(self) -> "QPoly":
        return QPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval_scalar(self, t) -> Fraction:
        t = rat(t)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * t + c
        return out

    def eval_matrix(self, m: QMatrix) -> QMatrix:
        if not m.is_square():
            raise ValueError("polynomial of non-square matrix")
        out = QMatrix.zeros(m.rows, m.cols)
        for c in reversed(self.coeffs):
            out = out * m
            if c != 0:
                out = out + QMatrix.identity(m.rows).scale(c)
        return out

    def compose_mod(self, inner: "QPoly", modulus: "QPoly") -> "QPoly":
        """self(inner) reduced mod modulus (Horner with reduction)."""
        out = QPoly.zero()
        for c in reversed(self.coeffs):
            out = (out * inner + QPoly([c])) % modulus
        return out


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over Q via Euclid."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def poly_xgcd(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly, QPoly]:
    """(g, u, v) with u a + v b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = QPoly.one(), QPoly.zero()
    t0, t1 = QPoly.zero(), QPoly.one()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.leading()
    inv = 1 / lead
    return r0.monic(), s0 * inv, t0 * inv


def squarefree_part(p: QPoly) -> QPoly:
    """p / gcd(p, p'), made monic.  Same roots, multiplicity one."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.is_zero() or g.degree == 0:
        return p.monic()
    return (p // g).monic()


def minimal_polynomial(m: QMatrix) -> QPoly:
    """Monic p of least degree with p(m) = 0.

    Found as the first linear dependence among vec(I), vec(m), vec(m^2), ...
    """
    if not m.is_square():
        raise ValueError("minimal polynomial of non-square matrix")
    n = m.rows
    if n == 0:
        return QPoly.one()
    power = QMatrix.identity(n)
    flat_powers = [tuple(x for row in power.data for x in row)]
    for k in range(1, n + 1):
        power = power * m
        flat_powers.append(tuple(x for row in power.data for x in row))
        cols = QMatrix.from_cols(flat_powers)
        ker = kernel_basis(cols)
        if ker:
            coeffs = ker[0]
            lead = coeffs[-1]
            if lead == 0:
                # dependence among lower powers would have been caught earlier
                raise AssertionError("unexpected kernel shape in minimal_polynomial")
            return QPoly([c / lead for c in coeffs])
    raise AssertionError("minimal polynomial not found within dimension bound")


# ---------------------------------------------------------------------------
# Integer lattice routines (used by the toric module).

def integer_kernel_basis(rows: list[list[int]]) -> list[list[int]]:
    """Basis of the integer kernel lattice {v in Z^g : M v = 0}.

    Column reduction of M by unimodular operations, mirrored on an identity
    matrix; the mirror columns under the zero columns of the reduced M form
    a lattice basis of the kernel.
    """
    if not rows:
        return []
    g = len(rows[0])
    m = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(g)] for i in range(g)]

    def col(mat, j):
        return [mat[i][j] for i in range(len(mat))]

    def addmul_col(mat, dst, src, c):
        for i in range(len(mat)):
            mat[i][dst] += c * mat[i][src]

    def swap_col(mat, a, b):
        for i in range(len(mat)):
            mat[i][a], mat[i][b] = mat[i][b], mat[i][a]

    lead = 0
    for r in range(len(m)):
        # clear row r to a single nonzero entry at column `lead`
        while True:
            nz = [j for j in range(lead, g) if m[r][j] != 0]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: (abs(m[r][j]), j))
            for j in nz:
                if j == j0:
                    continue
                q = m[r][j] // m[r][j0]
                if q:
                    addmul_col(m, j, j0, -q)
                    addmul_col(u, j, j0, -q)
        nz = [j for j in range(lead, g) if m[r][j] != 0]
        if nz:
            j0 = nz[0]
            if j0 != lead:
                swap_col(m, lead, j0)
                swap_col(u, lead, j0)
            lead += 1
            if lead == g:
                break
    basis = []
    for j in range(g):
        if all(m[i][j] == 0 for i in range(len(m))):
            v = col(u, j)
            if any(v):
                basis.append(v)
    return basis


def hermite_row_basis(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite basis of the lattice spanned by integer rows."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    g = len(work[0])
    basis: list[list[int]] = []
    c = 0
    while work and c < g:
        cand = [r for r in work if r[c] != 0]
        rest = [r for r in work if r[c] == 0]
        if not cand:
            work = rest
            c += 1
            continue
        while len(cand) > 1:
            cand.sort(key=lambda r: abs(r[c]))
            base = cand[0]
            new = [base]
            for r in cand[1:]:
                q = r[c] // base[c]
                r2 = [a - q * b for a, b in zip(r, base)]
                if r2[c] != 0:
                    new.append(r2)
                elif any(r2):
                    rest.append(r2)
            cand = new
        pivot = cand[0]
        if pivot[c] < 0:
            pivot = [-a for a in pivot]
        basis.append(pivot)
        work = rest
        c += 1
    # reduce rows above pivots for a canonical result
    for i in range(len(basis) - 1, -1, -1):
        pc = next(j for j, a in enumerate(basis[i]) if a != 0)
        for k in range(i):
            q = basis[k][pc] // basis[i][pc]
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return basis


def lattice_coords(basis: list[list[int]], v: list[int]) -> list[int] | None:
    """Integer coordinates of v in a Hermite row basis, or None."""
    if not basis:
        return [] if not any(v) else None
    w = list(v)
    coords = []
    for row in basis:
        pc = next(j for j, a in enumerate(row) if a != 0)
        if w[pc] % row[pc] != 0:
            return None
        q = w[pc] // row[pc]
        coords.append(q)
        w = [a - q * b for a, b in zip(w, row)]
    if any(w):
        return None
    return coords


def in_lattice(basis: list[list[int]], v: list[int]) -> bool:
    return lattice_coords(basis, v) is not None
