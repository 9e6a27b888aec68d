from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from tannaka_forge.builtin import heisenberg, sl2, sl3, unitriangular4
from tannaka_forge.exactlin import QMatrix, Span, vec_is_zero
from tannaka_forge.liealg import (
    bracket,
    from_matrices,
    full_subalgebra,
    lie_algebra,
    lower_central_series,
    subalgebra,
    validate,
)

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=1, max_value=3),
)


def test_sl2_validates():
    assert validate(sl2()) == []


def test_sl2_rescaled_ef_bracket_still_lie():
    # [e,f] = 2h with the usual h-brackets is isomorphic to sl2
    # (take e -> 2 E12, f -> E21, h -> diag(1,-1)); Jacobi holds.
    g = lie_algebra(
        ["e", "f", "h"],
        {(0, 1): (0, 0, 2), (2, 0): (2, 0, 0), (2, 1): (0, -2, 0)},
    )
    assert validate(g) == []


def test_wrong_hf_constant_violates_jacobi():
    # [e,f]=h, [h,e]=2e, [h,f]=-3f: the Jacobi sum on (e,f,h) is
    # [[e,f],h] + [[f,h],e] + [[h,e],f] = 0 + 3[f,e] + 2[e,f] = -h
    g = lie_algebra(
        ["e", "f", "h"],
        {(0, 1): (0, 0, 1), (2, 0): (2, 0, 0), (2, 1): (0, -3, 0)},
    )
    bad = validate(g)
    assert ("jacobi", 0, 1, 2) in bad


def test_abelian_validates():
    g = lie_algebra(["a", "b"], {})
    assert validate(g) == []


def test_heisenberg_and_ut4_validate():
    assert validate(heisenberg()) == []
    assert validate(unitriangular4()) == []
    assert validate(sl3()) == []


def test_bracket_structure_readoff():
    g = sl2()
    e = (1, 0, 0)
    f = (0, 1, 0)
    assert bracket(g, e, f) == (Fraction(0), Fraction(0), Fraction(1))


def test_bracket_antisymmetry_on_equal_args():
    g = sl2()
    x = (Fraction(1, 2), 3, -1)
    assert vec_is_zero(bracket(g, x, x))


def test_heisenberg_brackets():
    g = heisenberg()
    x = (1, 0, 0)
    y = (0, 1, 0)
    z = (0, 0, 1)
    assert bracket(g, x, y) == (Fraction(0), Fraction(0), Fraction(1))
    assert vec_is_zero(bracket(g, x, z))


@given(
    st.tuples(small_rationals, small_rationals, small_rationals),
    st.tuples(small_rationals, small_rationals, small_rationals),
    st.tuples(small_rationals, small_rationals, small_rationals),
)
@settings(max_examples=80, deadline=None)
def test_jacobi_identity_random_triples(x, y, z):
    g = sl2()
    s1 = bracket(g, x, bracket(g, y, z))
    s2 = bracket(g, y, bracket(g, z, x))
    s3 = bracket(g, z, bracket(g, x, y))
    total = tuple(a + b + c for a, b, c in zip(s1, s2, s3))
    assert vec_is_zero(total)


def test_lower_central_series_heisenberg():
    series = lower_central_series(heisenberg())
    dims = [len(t) for t in series.terms]
    assert dims == [3, 1, 0]
    assert series.is_nilpotent and series.nilpotency_class == 2


def test_lower_central_series_sl2_not_nilpotent():
    series = lower_central_series(sl2())
    assert not series.is_nilpotent
    # stabilizes at l^1 = sl2
    assert len(series.terms[-1]) == 3


def test_lower_central_series_abelian():
    series = lower_central_series(lie_algebra(["a", "b"], {}))
    assert [len(t) for t in series.terms] == [2, 0]
    assert series.nilpotency_class == 1


def test_ut4_class_three():
    series = lower_central_series(unitriangular4())
    assert series.is_nilpotent and series.nilpotency_class == 3


def test_series_terms_invariant_under_bracketing():
    g = unitriangular4()
    series = lower_central_series(g)
    full = full_subalgebra(g)
    for term in series.terms:
        span = Span(g.dim, term)
        for x in full.basis:
            for y in term:
                assert span.contains(bracket(g, x, y))


def test_nilpotency_class_kills_nested_brackets():
    g = heisenberg()
    series = lower_central_series(g)
    c = series.nilpotency_class
    basis = full_subalgebra(g).basis
    # every (c+1)-fold left-nested bracket vanishes
    def nested(seq):
        acc = seq[0]
        for v in seq[1:]:
            acc = bracket(g, acc, v)
        return acc

    import itertools

    for seq in itertools.product(basis, repeat=c + 1):
        assert vec_is_zero(nested(list(seq)))


def test_from_matrices_roundtrip_sl2():
    e = QMatrix([[0, 1], [0, 0]])
    f = QMatrix([[0, 0], [1, 0]])
    h = QMatrix([[1, 0], [0, -1]])
    g = from_matrices([e, f, h], ["e", "f", "h"])
    assert validate(g) == []
    assert g.structure[0][1] == (Fraction(0), Fraction(0), Fraction(1))
    assert g.structure[2][0] == (Fraction(2), Fraction(0), Fraction(0))


def test_from_matrices_rejects_non_closed():
    a = QMatrix([[0, 1], [0, 0]])
    b = QMatrix([[0, 0], [1, 0]])
    with pytest.raises(ValueError):
        from_matrices([a, b])


def test_subalgebra_closure_check():
    g = sl2()
    sub = subalgebra(g, [(0, 0, 1)])  # the h line
    assert len(sub.basis) == 1
    with pytest.raises(ValueError):
        subalgebra(g, [(1, 0, 0), (0, 1, 0)])  # e, f do not close


def test_antisymmetric_completion_on_load():
    g = lie_algebra(["x", "y"], {(0, 1): (0, 0)})
    assert g.structure[1][0] == (Fraction(0), Fraction(0))
    g2 = lie_algebra(["x", "y", "z"], {(1, 0): (0, 0, -1)})
    assert g2.structure[0][1] == (Fraction(0), Fraction(0), Fraction(1))
