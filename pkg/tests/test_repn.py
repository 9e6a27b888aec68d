from fractions import Fraction

import pytest

from tannaka_forge.builtin import (
    heisenberg,
    heisenberg_standard,
    sl2,
    sl2_irreducible,
)
from tannaka_forge.exactlin import QMatrix, Span, inverse, is_invertible
from tannaka_forge.repn import (
    check_module,
    direct_sum,
    dual_module,
    hom_space,
    irreducibility,
    is_invariant_subspace,
    module,
    submodule_generated,
    tensor_module,
    trivial_module,
)


@pytest.fixture(scope="module")
def g():
    return sl2()


@pytest.fixture(scope="module")
def l1(g):
    return sl2_irreducible(g, 1)


@pytest.fixture(scope="module")
def l2(g):
    return sl2_irreducible(g, 2)


def test_natural_rep_checks(g):
    e = QMatrix([[0, 1], [0, 0]])
    f = QMatrix([[0, 0], [1, 0]])
    h = QMatrix([[1, 0], [0, -1]])
    assert check_module(g, [e, f, h]) == []


def test_wrong_h_violates_at_ef(g):
    e = QMatrix([[0, 1], [0, 0]])
    f = QMatrix([[0, 0], [1, 0]])
    h = QMatrix([[1, 0], [0, 1]])
    assert (0, 1) in check_module(g, [e, f, h])


def test_all_zero_matrices_always_module(g):
    z = QMatrix.zeros(3, 3)
    assert check_module(g, [z, z, z]) == []


def test_trivial_module(g):
    t = trivial_module(g)
    assert t.dim == 1 and t.is_zero_action()


def test_tensor_dims_and_h_eigenvalues(g, l1):
    t = tensor_module(l1, l1)
    assert t.dim == 4
    h = t.action[2]
    eigs = sorted(h.data[i][i] for i in range(4))
    assert eigs == [Fraction(-2), Fraction(0), Fraction(0), Fraction(2)]
    assert check_module(g, list(t.action)) == []


def test_tensor_with_trivial_isomorphic(g, l1):
    t = tensor_module(l1, trivial_module(g))
    homs = hom_space(l1, t)
    assert any(is_invertible(a) for a in homs)


def test_direct_sum_dims_add(g, l1, l2):
    s = direct_sum(l1, l2)
    assert s.dim == 5
    assert check_module(g, list(s.action)) == []


def test_dual_checks_and_negated_eigenvalues(g, l2):
    d = dual_module(l2)
    assert check_module(g, list(d.action)) == []
    hd = d.action[2]
    assert sorted(hd.data[i][i] for i in range(3)) == [Fraction(-2), Fraction(0), Fraction(2)]


def test_natural_rep_self_dual(g, l1):
    d = dual_module(l1)
    homs = hom_space(d, l1)
    assert len(homs) == 1
    assert is_invertible(homs[0])


def test_double_dual_is_identity(g, l1):
    dd = dual_module(dual_module(l1))
    assert dd.action == l1.action


def test_trivial_dual_trivial(g):
    t = trivial_module(g)
    assert dual_module(t).is_zero_action()


def test_submodule_from_highest_vector(g, l1):
    t = tensor_module(l1, l1)
    # v0 (x) v0 is the top weight vector of the 3-dim symmetric part
    top = (1, 0, 0, 0)
    res = submodule_generated(t, [top])
    assert len(res.basis) == 3
    assert res.module is not None and res.module.dim == 3
    # inclusion intertwines
    inc = res.inclusion.matrix
    for a, b in zip(res.module.action, t.action, strict=True):
        assert inc * a == b * inc


def test_submodule_zero_vector_rejected(g, l1):
    res = submodule_generated(l1, [(0, 0)])
    assert res.module is None and res.basis == ()


def test_submodule_of_irreducible_is_everything(g, l2):
    res = submodule_generated(l2, [(0, 1, 0)])
    assert len(res.basis) == 3


def test_submodule_saturation_fixed_point(g, l1):
    t = tensor_module(l1, l1)
    res = submodule_generated(t, [(1, 0, 0, 0)])
    again = submodule_generated(t, res.basis)
    assert again.basis == res.basis


def test_hom_schur(g, l1, l2):
    assert len(hom_space(l1, l1)) == 1
    assert len(hom_space(l1, l2)) == 0


def test_hom_symplectic_form(g, l1):
    t = tensor_module(l1, l1)
    homs = hom_space(t, trivial_module(g))
    assert len(homs) == 1
    omega = homs[0]
    # the invariant 2-form is antisymmetric: omega(v (x) w) = -omega(w (x) v)
    assert omega[(0, 1)] == -omega[(0, 2)]
    assert omega[(0, 0)] == 0 and omega[(0, 3)] == 0


def test_hom_intertwining_identity(g, l1):
    t = tensor_module(l1, l1)
    for a in hom_space(t, t):
        for m, n in zip(t.action, t.action, strict=True):
            assert a * m == n * a


def test_invariant_subspace_weight_line_not_e_invariant(g, l1):
    e = l1.action[0]
    # lowest weight line of L1 is spanned by v1
    assert not is_invariant_subspace(l1, [(0, 1)], actor=[e])


def test_generated_subspace_invariant(g, l1):
    t = tensor_module(l1, l1)
    res = submodule_generated(t, [(1, 0, 0, 0)])
    assert is_invariant_subspace(t, res.basis)


def test_kernel_of_morphism_invariant(g, l1):
    t = tensor_module(l1, l1)
    omega = hom_space(t, trivial_module(g))[0]
    from tannaka_forge.exactlin import kernel_basis

    ker = kernel_basis(omega)
    assert is_invariant_subspace(t, ker)


def test_irreducibility_certificates(g, l1, l2):
    c1 = irreducibility(l1)
    assert c1.irreducible and c1.commutant_dim == 1
    c2 = irreducibility(l2)
    assert c2.irreducible
    t = tensor_module(l1, l1)
    ct = irreducibility(t)
    assert not ct.irreducible


def test_heisenberg_standard_module():
    g = heisenberg()
    v = heisenberg_standard(g)
    assert check_module(g, list(v.action)) == []
    assert bool(is_invariant_subspace(v, [(1, 0, 0)]))


def test_module_constructor_rejects_bad(g):
    e = QMatrix([[0, 1], [0, 0]])
    f = QMatrix([[0, 0], [1, 0]])
    bad_h = QMatrix([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        module(g, "bad", (e, f, bad_h))
