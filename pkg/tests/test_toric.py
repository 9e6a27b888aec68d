import itertools
import random
from fractions import Fraction

import pytest

from tannaka_forge.builtin import (
    abelian,
    abelian_line,
    heisenberg,
    heisenberg_standard,
    sl2,
    sl2_irreducible,
)
from tannaka_forge.liealg import full_subalgebra, subalgebra
from tannaka_forge.oneparam import torus_family
from tannaka_forge.tannaka import build_closure, family_compose, identity_family, m_membership
from tannaka_forge.toric import (
    AtildePoint,
    Face,
    ToricRejection,
    evaluate_at_weight,
    face_meet,
    faces,
    factor_point,
    idempotent_of_face,
    is_idempotent_point,
    monoid_reachable,
    point_consistent,
    point_mul,
    rational_roots,
    sample_torus_point,
    saturation_check,
    toric_structure_report,
    torus_action_family,
    torus_point,
    weight_decomposition,
    weight_monoid,
    weight_monoid_from_generators,
)
from tannaka_forge.exactlin import QPoly


def nat_squared():
    return weight_monoid_from_generators([(1, 0), (0, 1)])


def integers_monoid():
    return weight_monoid_from_generators([(1,), (-1,)])


def nat_monoid():
    return weight_monoid_from_generators([(1,)])


def test_rational_roots():
    t = QPoly.x()
    one = QPoly.one()
    p = (t - one) * (t + 2 * one) * (2 * t - one).monic()
    roots = rational_roots(p.monic())
    assert roots == [Fraction(-2), Fraction(1, 2), Fraction(1)]
    assert rational_roots(QPoly([1, 0, 1])) is None  # t^2 + 1


def test_weight_decomposition_sl2_l2():
    g = sl2()
    l2 = sl2_irreducible(g, 2)
    h = subalgebra(g, [(0, 0, 1)])
    dec = weight_decomposition(l2, h)
    assert sorted(dec.keys()) == [(Fraction(-2),), (Fraction(0),), (Fraction(2),)]
    assert all(len(v) == 1 for v in dec.values())


def test_weight_decomposition_trivial():
    g = sl2()
    from tannaka_forge.repn import trivial_module

    h = subalgebra(g, [(0, 0, 1)])
    dec = weight_decomposition(trivial_module(g), h)
    assert list(dec.keys()) == [(Fraction(0),)]


def test_weight_decomposition_rejects_nilpotent():
    g = heisenberg()
    std = heisenberg_standard(g)
    z_line = subalgebra(g, [(0, 0, 1)])
    with pytest.raises(ToricRejection):
        weight_decomposition(std, z_line)


def test_weight_monoid_sl2():
    g = sl2()
    closure = build_closure(g, [sl2_irreducible(g, 1)], depth=2)
    h = subalgebra(g, [(0, 0, 1)])
    weights = weight_monoid(closure, h)
    assert weights.monoid.generators == ((-1,), (1,))
    assert weights.denominator == 1
    # tensor square has weights -2, 0, 2
    t_obj = next(o for o in closure.objects if o.provenance[0] == "tensor")
    assert sorted(weights.by_object[t_obj.oid]) == [(-2,), (0,), (2,)]


def test_weight_monoid_two_commuting_lines():
    g = abelian(2)
    va = abelian_line(g, [1, 0], mid="wa")
    vb = abelian_line(g, [0, 1], mid="wb")
    closure = build_closure(g, [va, vb], depth=2)
    weights = weight_monoid(closure, full_subalgebra(g))
    assert weights.monoid.generators == ((0, 1), (1, 0))


# --- brute-force face oracle -------------------------------------------------

def ball(monoid, budget):
    return set(monoid_reachable(monoid, budget))


def brute_force_faces(monoid, budget=6):
    """Definition-level oracle: a face is a submonoid F with
    (A \\ F) + A inside A \\ F; checked on the bounded ball, faces keyed by
    the set of generators they contain."""
    amb = ball(monoid, budget)
    half = ball(monoid, budget // 2)
    out = set()
    g = len(monoid.generators)
    for picks in itertools.product([0, 1], repeat=g):
        sel = tuple(i for i in range(g) if picks[i])
        sub = weight_monoid_from_generators(
            [monoid.generators[i] for i in sel] or [tuple(0 for _ in range(monoid.rank))]
        )
        fball = set(monoid_reachable(sub, budget))
        # face condition on the ball
        ok = True
        for x in half:
            if x in fball:
                continue
            for y in half:
                if tuple(a + b for a, b in zip(x, y)) in fball:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            members = tuple(
                i for i in range(g) if monoid.generators[i] in fball
            )
            out.add(members)
    return sorted(out)


def test_faces_nat_squared_matches_oracle():
    m = nat_squared()
    got = sorted(f.members for f in faces(m))
    assert got == [(), (0,), (0, 1), (1,)]
    assert got == brute_force_faces(m)


def test_faces_integers_single_face():
    m = integers_monoid()
    got = [f.members for f in faces(m)]
    assert got == [(0, 1)]
    assert sorted(got) == brute_force_faces(m)


def test_faces_nat_two():
    m = nat_monoid()
    got = sorted(f.members for f in faces(m))
    assert got == [(), (0,)]
    assert got == brute_force_faces(m)


def test_faces_redundant_generator():
    # generators 1 and 2 on a line: the ray face must contain both
    m = weight_monoid_from_generators([(1,), (2,)])
    got = sorted(f.members for f in faces(m))
    assert got == [(), (0, 1)]
    assert got == brute_force_faces(m)


def test_face_functional_certificates():
    m = nat_squared()
    for f in faces(m):
        if f.functional is None:
            continue
        for i in range(len(m.generators)):
            val = sum(f.functional[t] * m.generators[i][t] for t in range(m.rank))
            if i in f.members:
                assert val == 0
            else:
                assert val > 0


def test_face_lattice_closed_and_meet():
    m = nat_squared()
    fl = faces(m)
    members = {f.members for f in fl}
    for a in fl:
        for b in fl:
            assert face_meet(a, b) in members


def test_idempotents():
    m = nat_squared()
    fl = faces(m)
    full = next(f for f in fl if f.members == (0, 1))
    assert idempotent_of_face(m, full).values == (Fraction(1), Fraction(1))
    ray = next(f for f in fl if f.members == (0,))
    assert idempotent_of_face(m, ray).values == (Fraction(1), Fraction(0))
    for f in fl:
        assert is_idempotent_point(idempotent_of_face(m, f))


def test_idempotent_meet_product_law():
    m = nat_squared()
    fl = faces(m)
    idem = {f.members: idempotent_of_face(m, f) for f in fl}
    for a in fl:
        for b in fl:
            assert point_mul(idem[a.members], idem[b.members]) == idem[face_meet(a, b)]


def test_point_consistency_on_relations():
    m = integers_monoid()
    assert m.relations == ((1, 1),)
    good = AtildePoint((Fraction(2), Fraction(1, 2)))
    assert point_consistent(m, good)
    bad = AtildePoint((Fraction(2), Fraction(1, 3)))
    assert not point_consistent(m, bad)


def test_torus_point_rejects_inconsistent():
    m = integers_monoid()
    full = faces(m)[0]
    with pytest.raises(ToricRejection):
        torus_point(m, full, {0: Fraction(2), 1: Fraction(1, 3)})
    p = torus_point(m, full, {0: Fraction(2), 1: Fraction(1, 2)})
    assert p.values == (Fraction(2), Fraction(1, 2))


def test_sample_and_factor():
    m = nat_squared()
    fl = faces(m)
    rng = random.Random(5)
    for f in fl:
        p = sample_torus_point(m, f, rng)
        assert p.support() == f.members
        fact = factor_point(m, fl, p)
        assert fact is not None
        tau, e = fact
        assert point_mul(tau, e) == p
        assert all(v != 0 for v in tau.values)


def test_factorization_example():
    m = nat_squared()
    fl = faces(m)
    p = AtildePoint((Fraction(3), Fraction(0)))
    tau, e = factor_point(m, fl, p)
    assert tau.values == (Fraction(3), Fraction(1))
    assert e.values == (Fraction(1), Fraction(0))


def test_evaluate_at_weight_and_D_membership():
    m = nat_squared()
    fl = faces(m)
    x_index = m.generators.index((1, 0))
    ray = next(f for f in fl if f.members == (x_index,))
    e_ray = idempotent_of_face(m, ray)
    e_zero = idempotent_of_face(m, next(f for f in fl if f.members == ()))
    lam = (1, 0)
    assert evaluate_at_weight(m, e_ray, lam) == 1
    assert evaluate_at_weight(m, e_zero, lam) == 0


def test_evaluate_unreachable_weight():
    m = weight_monoid_from_generators([(2,)])
    p = AtildePoint((Fraction(5),))
    with pytest.raises(ToricRejection):
        evaluate_at_weight(m, p, (1,))


def test_structure_report_nat_squared():
    rep = toric_structure_report(nat_squared(), seed=3)
    assert rep["face_count"] == 4
    for key in (
        "lattice_closed_under_meet",
        "idempotent_product_law",
        "idempotents_match_faces",
        "factorizations_ok",
        "unit_group_ok",
        "principal_open_membership_ok",
        "orbit_closure_shadow_ok",
    ):
        assert rep[key] is True, key
    assert rep["saturation"]["saturated"] is True


def test_structure_report_integers():
    rep = toric_structure_report(integers_monoid(), seed=1)
    assert rep["face_count"] == 1
    assert rep["idempotents_match_faces"] is True


def test_saturation_witness():
    m = weight_monoid_from_generators([(2,), (3,)])
    rep = saturation_check(m)
    assert rep["saturated"] is False
    assert rep["witness"] == [1]


def test_torus_action_matches_one_parameter_torus():
    g = sl2()
    closure = build_closure(g, [sl2_irreducible(g, 1)], depth=2)
    h = subalgebra(g, [(0, 0, 1)])
    weights = weight_monoid(closure, h)
    # generators are (-1,), (1,): the point s -> s^w with s = 2
    point = AtildePoint((Fraction(1, 2), Fraction(2)))
    assert point_consistent(weights.monoid, point)
    fam = torus_action_family(closure, weights, point)
    assert fam == torus_family(closure, (0, 0, 1), 2)


def test_torus_action_unit_point_is_identity():
    g = sl2()
    closure = build_closure(g, [sl2_irreducible(g, 1)], depth=2)
    h = subalgebra(g, [(0, 0, 1)])
    weights = weight_monoid(closure, h)
    point = AtildePoint((Fraction(1), Fraction(1)))
    assert torus_action_family(closure, weights, point) == identity_family(closure)


def test_torus_action_idempotent_projection():
    g = abelian(2)
    va = abelian_line(g, [1, 0], mid="wa")
    vb = abelian_line(g, [0, 1], mid="wb")
    closure = build_closure(g, [va, vb], depth=2)
    weights = weight_monoid(closure, full_subalgebra(g))
    fl = faces(weights.monoid)
    ray = next(f for f in fl if f.members and len(f.members) == 1)
    e = idempotent_of_face(weights.monoid, ray)
    fam = torus_action_family(closure, weights, e)
    assert family_compose(fam, fam) == fam
    assert m_membership(closure, fam).ok
    assert fam != identity_family(closure)


def test_torus_action_monoid_homomorphism():
    g = sl2()
    closure = build_closure(g, [sl2_irreducible(g, 1)], depth=2)
    h = subalgebra(g, [(0, 0, 1)])
    weights = weight_monoid(closure, h)
    p = AtildePoint((Fraction(1, 3), Fraction(3)))
    q = AtildePoint((Fraction(1, 2), Fraction(2)))
    lhs = torus_action_family(closure, weights, point_mul(p, q))
    rhs = family_compose(
        torus_action_family(closure, weights, p),
        torus_action_family(closure, weights, q),
    )
    assert lhs == rhs


def test_mc_toric_restriction_formula():
    # the matrix coefficient through a torus point evaluates to
    # sum over weights of phi(v_lambda) alpha(lambda)
    g = sl2()
    closure = build_closure(g, [sl2_irreducible(g, 1)], depth=2)
    h = subalgebra(g, [(0, 0, 1)])
    weights = weight_monoid(closure, h)
    alpha = AtildePoint((Fraction(1, 5), Fraction(5)))
    fam = torus_action_family(closure, weights, alpha)
    obj = closure.by_id("L1")
    from tannaka_forge.exactlin import vec_dot, vector

    phi = vector((3, 4))
    v = vector((1, 2))
    lhs = vec_dot(phi, fam.entries["L1"].apply(v))
    reach = monoid_reachable(weights.monoid)
    rhs = Fraction(0)
    for w, vecs in weights.by_object["L1"].items():
        # project v onto the weight space along the others
        from tannaka_forge.exactlin import QMatrix, inverse

        allcols = []
        order = []
        for ww in sorted(weights.by_object["L1"]):
            for u in weights.by_object["L1"][ww]:
                allcols.append(u)
                order.append(ww)
        basis = QMatrix.from_cols(allcols)
        coords = inverse(basis).apply(v)
        proj = [Fraction(0), Fraction(0)]
        for c, u, ww in zip(coords, allcols, order):
            if ww == w:
                proj = [p + c * x for p, x in zip(proj, u)]
        rhs += vec_dot(phi, tuple(proj)) * evaluate_at_weight(weights.monoid, alpha, w, reach)
    assert lhs == rhs
