from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from tannaka_forge.exactlin import (
    QMatrix,
    QPoly,
    Span,
    hermite_row_basis,
    in_lattice,
    integer_kernel_basis,
    inverse,
    kernel_basis,
    lattice_coords,
    left_inverse,
    minimal_polynomial,
    poly_gcd,
    poly_xgcd,
    qstr,
    rank,
    rref,
    solve,
    squarefree_part,
)

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=4),
)


def mat(rows):
    return QMatrix(rows)


def test_rank_identity():
    assert rank(QMatrix.identity(3)) == 3


def test_rank_repeated_row():
    assert rank(mat([[1, 1], [1, 1]])) == 1


def test_rank_single_nonzero_row():
    assert rank(mat([[0, 1], [0, 0]])) == 1


def test_kernel_identity_empty():
    assert kernel_basis(QMatrix.identity(4)) == []


def test_kernel_one_equation():
    basis = kernel_basis(mat([[1, 1]]))
    assert len(basis) == 1
    assert basis[0] == (Fraction(-1), Fraction(1))


def test_kernel_zero_matrix():
    basis = kernel_basis(QMatrix.zeros(2, 2))
    assert len(basis) == 2


def test_rank_plus_nullity():
    m = mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) + len(kernel_basis(m)) == m.cols


@given(
    st.lists(
        st.lists(small_rationals, min_size=3, max_size=3),
        min_size=1,
        max_size=4,
    )
)
@settings(max_examples=60, deadline=None)
def test_rank_nullity_property(rows):
    m = QMatrix(rows)
    basis = kernel_basis(m)
    assert rank(m) + len(basis) == m.cols
    for v in basis:
        assert all(x == 0 for x in m.apply(v))


def test_solve_and_inverse():
    a = mat([[2, 1], [1, 3]])
    x = solve(a, (5, 5))
    assert x is not None
    assert a.apply(x) == (Fraction(5), Fraction(5))
    ainv = inverse(a)
    assert a * ainv == QMatrix.identity(2)


def test_solve_inconsistent():
    assert solve(mat([[1, 1], [1, 1]]), (0, 1)) is None


def test_left_inverse():
    a = mat([[1, 0], [0, 1], [1, 1]])
    l = left_inverse(a)
    assert l * a == QMatrix.identity(2)


def test_kron_convention_first_factor_major():
    a = mat([[0, 1], [0, 0]])
    b = QMatrix.identity(2)
    k = a.kron(b)
    # (i,j) -> i*2 + j; entry ((0,p),(1,q)) = a[0,1] * b[p,q]
    assert k[(0, 2)] == 1 and k[(1, 3)] == 1
    assert k[(0, 3)] == 0 and k[(2, 0)] == 0


def test_minimal_polynomial_nilpotent_block():
    m = mat([[0, 1], [0, 0]])
    assert minimal_polynomial(m) == QPoly([0, 0, 1])


def test_minimal_polynomial_identity():
    assert minimal_polynomial(QMatrix.identity(2)) == QPoly([-1, 1])


def test_minimal_polynomial_distinct_diagonal():
    m = mat([[1, 0], [0, 2]])
    assert minimal_polynomial(m) == QPoly([2, -3, 1])  # (t-1)(t-2)


def test_minimal_polynomial_annihilates():
    m = mat([[1, 2, 0], [0, 1, 1], [0, 0, 3]])
    p = minimal_polynomial(m)
    assert p.eval_matrix(m).is_zero()


def test_squarefree_part_t_squared():
    assert squarefree_part(QPoly([0, 0, 1])) == QPoly([0, 1])


def test_squarefree_part_multiplicities():
    t = QPoly.x()
    one = QPoly.one()
    p = (t - one) * (t - one) * (t - one) * (t - 2 * one)
    sf = squarefree_part(p)
    assert sf == ((t - one) * (t - 2 * one)).monic()


def test_squarefree_part_already_squarefree():
    p = QPoly([1, 0, 1])  # t^2 + 1
    assert squarefree_part(p) == p


def test_squarefree_gcd_with_derivative_is_one():
    t = QPoly.x()
    p = (t - QPoly.one()) * (t - QPoly.one()) * t * t * (t + 3 * QPoly.one())
    sf = squarefree_part(p)
    assert poly_gcd(sf, sf.derivative()) == QPoly.one()


def test_poly_xgcd_bezout():
    t = QPoly.x()
    a = (t - QPoly.one()) * (t - 2 * QPoly.one())
    b = (t - QPoly.one()) * (t + QPoly.one())
    g, u, v = poly_xgcd(a, b)
    assert g == (t - QPoly.one()).monic()
    assert u * a + v * b == g


def test_poly_divmod_roundtrip():
    a = QPoly([1, 2, 0, 5])
    b = QPoly([1, 1])
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_rref_canonical():
    m = mat([[2, 4], [1, 2]])
    rows, pivots = rref(m)
    assert pivots == [0]
    assert rows[0] == (Fraction(1), Fraction(2))


def test_span_membership_and_equality():
    s = Span(3, [(1, 0, 1), (0, 1, 0)])
    assert s.rank == 2
    assert s.contains((2, 3, 2))
    assert not s.contains((0, 0, 1))
    s2 = Span(3, [(1, 1, 1), (1, -1, 1)])
    assert s == s2


def test_span_add_reports_growth():
    s = Span(2)
    assert s.add((1, 1))
    assert not s.add((2, 2))
    assert s.add((1, 0))
    assert s.rank == 2


def test_determinism_bit_identical():
    rows = [[Fraction(3, 7), 1, 2], [5, Fraction(-1, 3), 0], [1, 1, 1]]
    a = kernel_basis(QMatrix(rows + [[9, 9, 9]]))
    b = kernel_basis(QMatrix(rows + [[9, 9, 9]]))
    assert a == b
    p1 = minimal_polynomial(QMatrix([[1, 1], [0, 1]]))
    p2 = minimal_polynomial(QMatrix([[1, 1], [0, 1]]))
    assert p1.coeffs == p2.coeffs


def test_qstr_format():
    assert qstr(Fraction(1, 2)) == "1/2"
    assert qstr(Fraction(-3)) == "-3"
    assert qstr(Fraction(4, 2)) == "2"


def test_integer_kernel_basis():
    ker = integer_kernel_basis([[1, 1, -1]])
    assert len(ker) == 2
    for v in ker:
        assert v[0] + v[1] - v[2] == 0
    # spans the full kernel lattice: (1, 0, 1) must be an integer combination
    h = hermite_row_basis(ker)
    assert in_lattice(h, [1, 0, 1])
    assert in_lattice(h, [0, 1, 1])
    assert not in_lattice(h, [1, 0, 0])


def test_hermite_and_coords():
    h = hermite_row_basis([[2, 0], [0, 3], [2, 3]])
    assert in_lattice(h, [2, 3])
    assert not in_lattice(h, [1, 0])
    c = lattice_coords(h, [4, 3])
    assert c is not None


@given(st.lists(small_rationals, min_size=2, max_size=5))
@settings(max_examples=40, deadline=None)
def test_poly_eval_matrix_matches_scalar_on_diagonal(cs):
    p = QPoly(cs)
    d = QMatrix([[2, 0], [0, -3]])
    m = p.eval_matrix(d)
    assert m[(0, 0)] == p.eval_scalar(2)
    assert m[(1, 1)] == p.eval_scalar(-3)
    assert m[(0, 1)] == 0


def test_matrix_power():
    m = mat([[1, 1], [0, 1]])
    assert m ** 3 == mat([[1, 3], [0, 1]])
    assert m ** 0 == QMatrix.identity(2)
