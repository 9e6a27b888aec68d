"""Reconstruction core: finite category closures and the monoid they cut out.

A closure is a finite fragment of the representation category: the trivial
module, the generators, optionally duals and explicit sums, all tensor
words up to a depth, and the kernels/images of every intertwiner among
them.  Natural families (one matrix per object) are the carrier for
elements of the monoid and of its Lie algebra.

The Lie algebra solver never materializes one unknown per object entry:
every derived object's matrix is a linear expression in the generator
objects' entries (tensor rule, block sums, duals, restriction through an
inclusion), so the homogeneous system stays small even for deep closures.
The solved space equals the Lie algebra of the finitely generated category
the closure represents; the report records whether it stabilized when the
depth grew.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactlin import (
    QMatrix,
    Span,
    Vector,
    inverse,
    is_invertible,
    kernel_basis,
    left_inverse,
    rank,
)
from .liealg import LieAlgebraDesc
from .repn import (
    ModuleDesc,
    Morphism,
    hom_space,
    irreducibility,
    submodule_generated,
    tensor_module,
    trivial_module,
)
from .uea import monomials_upto, pbw_matrix_table


class ClosureCapExceeded(RuntimeError):
    """Object budget hit; the closure is reported, never silently truncated."""


@dataclass(frozen=True)
class ClosureObject:
    index: int
    oid: str
    module: ModuleDesc
    provenance: tuple  # ("trivial",) ("generator",) ("tensor",i,j) ("sum",i,j) ("dual",i) ("submodule",i)
    inclusion: QMatrix | None = None  # parent-coordinates basis for submodules


@dataclass
class CategoryClosure:
    algebra: LieAlgebraDesc
    objects: list[ClosureObject]
    morphisms: list[Morphism]
    tensor_pairs: list[tuple[int, int, int]]  # (i, j, target)
    depth: int

    def by_id(self, oid: str) -> ClosureObject:
        for obj in self.objects:
            if obj.oid == oid:
                return obj
        raise KeyError(oid)

    def object_ids(self) -> list[str]:
        return [o.oid for o in self.objects]


@dataclass
class NatFamily:
    """One square matrix per closure object, keyed by object id."""

    entries: dict[str, QMatrix]

    def __eq__(self, other):
        return isinstance(other, NatFamily) and self.entries == other.entries


def identity_family(closure: CategoryClosure) -> NatFamily:
    return NatFamily({o.oid: QMatrix.identity(o.module.dim) for o in closure.objects})


def family_compose(a: NatFamily, b: NatFamily) -> NatFamily:
    if a.entries.keys() != b.entries.keys():
        raise ValueError("families live on different closures")
    return NatFamily({k: a.entries[k] * b.entries[k] for k in a.entries})


def family_inverse(a: NatFamily) -> NatFamily:
    return NatFamily({k: inverse(m) for k, m in a.entries.items()})


def family_is_invertible(a: NatFamily) -> bool:
    return all(is_invertible(m) for m in a.entries.values())


def family_add(a: NatFamily, b: NatFamily) -> NatFamily:
    return NatFamily({k: a.entries[k] + b.entries[k] for k in a.entries})


def family_scale(c, a: NatFamily) -> NatFamily:
    return NatFamily({k: m.scale(c) for k, m in a.entries.items()})


def family_commutator(a: NatFamily, b: NatFamily) -> NatFamily:
    return NatFamily(
        {k: a.entries[k] * b.entries[k] - b.entries[k] * a.entries[k] for k in a.entries}
    )


def algebra_image_family(closure: CategoryClosure, x: Sequence) -> NatFamily:
    """The family (rho_V(x))_V of a Lie algebra element."""
    return NatFamily({o.oid: o.module.act(x) for o in closure.objects})


def family_vec(closure: CategoryClosure, fam: NatFamily, ids: Sequence[str] | None = None) -> Vector:
    ids = list(ids) if ids is not None else closure.object_ids()
    out: list[Fraction] = []
    for oid in ids:
        m = fam.entries[oid]
        for row in m.data:
            out.extend(row)
    return tuple(out)


# ---------------------------------------------------------------------------
# Closure construction

def _is_trivial_like(m: ModuleDesc) -> bool:
    return m.dim == 1 and m.is_zero_action()


def build_closure(
    g: LieAlgebraDesc,
    generators: Sequence[ModuleDesc],
    depth: int,
    include_duals: bool = False,
    sums: Sequence[tuple[int, int]] = (),
    max_objects: int = 64,
) -> CategoryClosure:
    """Close the generators under tensor words, duals, sums, and submodules.

    depth is the total tensor degree of the longest word formed from the
    base objects (generators plus duals).  Submodule extraction repeats
    until no intertwiner among the objects has a proper nonzero kernel or
    image that is not already listed.  Raises ClosureCapExceeded when the
    object budget would be passed.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    from .repn import direct_sum, dual_module

    objects: list[ClosureObject] = []
    used_ids: set[str] = set()

    def fresh_id(base: str) -> str:
        oid = base
        k = 1
        while oid in used_ids:
            oid = f"{base}#{k}"
            k += 1
        used_ids.add(oid)
        return oid

    def add(module: ModuleDesc, provenance: tuple, inclusion: QMatrix | None = None) -> ClosureObject:
        if len(objects) >= max_objects:
            raise ClosureCapExceeded(
                f"closure would exceed {max_objects} objects; raise the cap explicitly"
            )
        oid = fresh_id(module.mid)
        if oid != module.mid:
            module = ModuleDesc(mid=oid, dim=module.dim, action=module.action, algebra=module.algebra)
        obj = ClosureObject(
            index=len(objects), oid=oid, module=module, provenance=provenance, inclusion=inclusion
        )
        objects.append(obj)
        return obj

    add(trivial_module(g), ("trivial",))
    base_indices: list[int] = []
    for gen in generators:
        if gen.algebra != g:
            raise ValueError("generator has a different parent algebra")
        base_indices.append(add(gen, ("generator",)).index)
    if include_duals:
        for i in list(base_indices):
            obj = objects[i]
            base_indices.append(add(dual_module(obj.module), ("dual", i)).index)

    tensor_pairs: list[tuple[int, int, int]] = []
    layer = list(base_indices)  # words of current length
    for _ in range(2, depth + 1):
        nxt = []
        for wi in layer:
            for bj in base_indices:
                t = tensor_module(objects[wi].module, objects[bj].module)
                obj = add(t, ("tensor", wi, bj))
                tensor_pairs.append((wi, bj, obj.index))
                nxt.append(obj.index)
        layer = nxt

    for (i, j) in sums:
        a, b = objects[i], objects[j]
        add(direct_sum(a.module, b.module), ("sum", i, j))

    # submodule saturation: kernels and images of every intertwiner
    hom_cache: dict[tuple[int, int], list[QMatrix]] = {}
    known_subspaces: dict[int, list[Span]] = {}
    sub_counter: dict[int, int] = {}

    def note_subspace(parent: ClosureObject, vectors: list[Vector]) -> bool:
        span = Span(parent.module.dim, vectors)
        if span.rank == 0 or span.rank == parent.module.dim:
            return False
        for seen in known_subspaces.setdefault(parent.index, []):
            if seen == span:
                return False
        known_subspaces[parent.index].append(span)
        res = submodule_generated(parent.module, span.basis())
        if res.module is None or res.module.dim == parent.module.dim:
            # saturation may grow the subspace to everything
            return False
        k = sub_counter.get(parent.index, 0)
        sub_counter[parent.index] = k + 1
        mod = ModuleDesc(
            mid=f"sub{k}({parent.oid})",
            dim=res.module.dim,
            action=res.module.action,
            algebra=g,
        )
        add(mod, ("submodule", parent.index), inclusion=res.inclusion.matrix)
        return True

    # one extraction pass over the tensor-closed object list
    count = len(objects)
    for i in range(count):
        for j in range(count):
            homs = hom_space(objects[i].module, objects[j].module)
            hom_cache[(i, j)] = homs
            for a in homs:
                ker = kernel_basis(a)
                if ker:
                    note_subspace(objects[i], list(ker))
                note_subspace(objects[j], [a.col(c) for c in range(a.cols)])

    morphisms: list[Morphism] = []
    for i in range(len(objects)):
        for j in range(len(objects)):
            homs = hom_cache.get((i, j))
            if homs is None:
                homs = hom_space(objects[i].module, objects[j].module)
            for a in homs:
                morphisms.append(Morphism(source=objects[i].oid, target=objects[j].oid, matrix=a))

    return CategoryClosure(
        algebra=g,
        objects=objects,
        morphisms=morphisms,
        tensor_pairs=tensor_pairs,
        depth=depth,
    )


def closure_summary(closure: CategoryClosure) -> dict:
    return {
        "depth": closure.depth,
        "objects": [
            {
                "id": o.oid,
                "dim": o.module.dim,
                "provenance": list(map(str, o.provenance)),
            }
            for o in closure.objects
        ],
        "morphism_count": len(closure.morphisms),
        "tensor_pairs": [list(t) for t in closure.tensor_pairs],
    }


# ---------------------------------------------------------------------------
# Lie algebra of the closure

def _tensor_expr(si: QMatrix, sj: QMatrix, n: int, m: int, nunk: int) -> QMatrix:
    """Expression rows of x_T = x_i (x) I + I (x) x_j from factor rows."""
    rows: list[list[Fraction]] = []
    zero = [Fraction(0)] * nunk
    for a in range(n):
        for b in range(m):
            for c in range(n):
                for d in range(m):
                    row = list(zero)
                    if b == d:
                        src = si.data[a * n + c]
                        for t, v in enumerate(src):
                            if v != 0:
                                row[t] += v
                    if a == c:
                        src = sj.data[b * m + d]
                        for t, v in enumerate(src):
                            if v != 0:
                                row[t] += v
                    rows.append(row)
    return QMatrix(rows, cols=nunk)


def _sum_expr(si: QMatrix, sj: QMatrix, n: int, m: int, nunk: int) -> QMatrix:
    rows: list[list[Fraction]] = []
    zero = [Fraction(0)] * nunk
    d = n + m
    for a in range(d):
        for b in range(d):
            if a < n and b < n:
                rows.append(list(si.data[a * n + b]))
            elif a >= n and b >= n:
                rows.append(list(sj.data[(a - n) * m + (b - n)]))
            else:
                rows.append(list(zero))
    return QMatrix(rows, cols=nunk)


def _dual_expr(si: QMatrix, n: int, nunk: int) -> QMatrix:
    rows = []
    for a in range(n):
        for b in range(n):
            rows.append([-v for v in si.data[b * n + a]])
    return QMatrix(rows, cols=nunk)


def _left_mult_rows(a: QMatrix, dv: int) -> QMatrix:
    """vec lift of X -> A X for X of size dv (A: dw x dv)."""
    return a.kron(QMatrix.identity(dv))


def _right_mult_rows(a: QMatrix, dw: int) -> QMatrix:
    """vec lift of X -> X A for X of size dw (A: dw x dv)."""
    return QMatrix.identity(dw).kron(a.transpose())


def _object_expressions(closure: CategoryClosure) -> tuple[dict[int, QMatrix], list[QMatrix], int]:
    """Per-object expression matrices (d^2 x nunk) over the generator
    unknowns, plus structural constraint blocks (submodule invariance)."""
    slots: dict[int, int] = {}
    nunk = 0
    for obj in closure.objects:
        if obj.provenance[0] == "generator":
            slots[obj.index] = nunk
            nunk += obj.module.dim ** 2
    exprs: dict[int, QMatrix] = {}
    constraints: list[QMatrix] = []
    for obj in closure.objects:
        kind = obj.provenance[0]
        d = obj.module.dim
        if kind == "trivial":
            exprs[obj.index] = QMatrix.zeros(d * d, nunk)
        elif kind == "generator":
            base = slots[obj.index]
            rows = []
            for r in range(d * d):
                row = [Fraction(0)] * nunk
                row[base + r] = Fraction(1)
                rows.append(row)
            exprs[obj.index] = QMatrix(rows, cols=nunk)
        elif kind == "tensor":
            _, i, j = obj.provenance
            n = closure.objects[i].module.dim
            m = closure.objects[j].module.dim
            exprs[obj.index] = _tensor_expr(exprs[i], exprs[j], n, m, nunk)
        elif kind == "sum":
            _, i, j = obj.provenance
            n = closure.objects[i].module.dim
            m = closure.objects[j].module.dim
            exprs[obj.index] = _sum_expr(exprs[i], exprs[j], n, m, nunk)
        elif kind == "dual":
            _, i = obj.provenance
            n = closure.objects[i].module.dim
            exprs[obj.index] = _dual_expr(exprs[i], n, nunk)
        elif kind == "submodule":
            _, p = obj.provenance
            a = obj.inclusion  # d_p x k
            l = left_inverse(a)
            dp = closure.objects[p].module.dim
            exprs[obj.index] = l.kron(a.transpose()) * exprs[p]
            proj = QMatrix.identity(dp) - a * l
            constraints.append(proj.kron(a.transpose()) * exprs[p])
        else:
            raise AssertionError(f"unknown provenance {obj.provenance}")
    return exprs, constraints, nunk


def lie_m_solve(closure: CategoryClosure) -> list[NatFamily]:
    """Basis of the space of families that are natural for every recorded
    morphism, derivation-like on recorded tensor pairs, and zero on trivial
    one-dimensional objects."""
    exprs, blocks, nunk = _object_expressions(closure)
    rows: list[list[Fraction]] = []
    for b in blocks:
        rows.extend(list(r) for r in b.data)
    index_of = {o.oid: o.index for o in closure.objects}
    for obj in closure.objects:
        if _is_trivial_like(obj.module) and obj.provenance[0] != "trivial":
            rows.extend(list(r) for r in exprs[obj.index].data)
    for mor in closure.morphisms:
        vi = index_of[mor.source]
        wi = index_of[mor.target]
        dv = closure.objects[vi].module.dim
        dw = closure.objects[wi].module.dim
        block = _left_mult_rows(mor.matrix, dv) * exprs[vi] - _right_mult_rows(
            mor.matrix, dw
        ) * exprs[wi]
        rows.extend(list(r) for r in block.data)
    if nunk == 0:
        return []
    if rows:
        ker = kernel_basis(QMatrix(rows, cols=nunk))
    else:
        ker = [tuple(Fraction(1) if i == j else Fraction(0) for j in range(nunk)) for i in range(nunk)]
    out = []
    for u in ker:
        entries = {}
        for obj in closure.objects:
            d = obj.module.dim
            flat = exprs[obj.index].apply(u)
            entries[obj.oid] = QMatrix(
                [flat[r * d : (r + 1) * d] for r in range(d)], cols=d
            )
        out.append(NatFamily(entries))
    return out


def lie_m_report(
    g: LieAlgebraDesc,
    generators: Sequence[ModuleDesc],
    depth: int,
    include_duals: bool = False,
    sums: Sequence[tuple[int, int]] = (),
    max_objects: int = 64,
) -> dict:
    """Solve at depth-1 and depth; record dimension and stabilization.

    Stabilization compares the solution spans restricted to the trivial and
    generator objects, which both closures share.
    """
    closure = build_closure(
        g, generators, depth, include_duals=include_duals, sums=sums, max_objects=max_objects
    )
    basis = lie_m_solve(closure)
    stabilized = None
    if depth >= 2:
        prev = build_closure(
            g,
            generators,
            depth - 1,
            include_duals=include_duals,
            sums=sums,
            max_objects=max_objects,
        )
        prev_basis = lie_m_solve(prev)
        shared = [o.oid for o in closure.objects if o.provenance[0] in ("trivial", "generator")]
        dim_here = sum(closure.by_id(oid).module.dim ** 2 for oid in shared)
        span_here = Span(dim_here, [family_vec(closure, f, shared) for f in basis])
        span_prev = Span(dim_here, [family_vec(prev, f, shared) for f in prev_basis])
        stabilized = len(basis) == len(prev_basis) and span_here == span_prev
    return {
        "closure": closure,
        "basis": basis,
        "lie_m_dim": len(basis),
        "stabilized": stabilized,
    }


# ---------------------------------------------------------------------------
# Membership and functionals

@dataclass
class MembershipResult:
    ok: bool
    violations: list[dict] = field(default_factory=list)


def check_naturality(closure: CategoryClosure, fam: NatFamily, limit: int = 10) -> MembershipResult:
    violations = []
    for mor in closure.morphisms:
        mv = fam.entries[mor.source]
        mw = fam.entries[mor.target]
        if mor.matrix * mv != mw * mor.matrix:
            violations.append(
                {"kind": "naturality", "source": mor.source, "target": mor.target}
            )
            if len(violations) >= limit:
                break
    return MembershipResult(ok=not violations, violations=violations)


def m_membership(closure: CategoryClosure, fam: NatFamily, limit: int = 10) -> MembershipResult:
    """Certify a candidate monoid element: naturality on every morphism,
    multiplicativity on recorded tensor pairs (and block sums), identity on
    trivial one-dimensional objects."""
    missing = [o.oid for o in closure.objects if o.oid not in fam.entries]
    if missing:
        raise ValueError(f"family misses objects {missing}")
    violations: list[dict] = []
    for obj in closure.objects:
        m = fam.entries[obj.oid]
        if m.rows != obj.module.dim or m.cols != obj.module.dim:
            raise ValueError(f"entry for {obj.oid} has wrong shape")
        if _is_trivial_like(obj.module) and m != QMatrix.identity(1):
            violations.append({"kind": "trivial_identity", "object": obj.oid})
    for (i, j, t) in closure.tensor_pairs:
        a = fam.entries[closure.objects[i].oid]
        b = fam.entries[closure.objects[j].oid]
        c = fam.entries[closure.objects[t].oid]
        if c != a.kron(b):
            violations.append(
                {
                    "kind": "tensor_multiplicativity",
                    "factors": [closure.objects[i].oid, closure.objects[j].oid],
                    "object": closure.objects[t].oid,
                }
            )
    for obj in closure.objects:
        if obj.provenance[0] == "sum":
            _, i, j = obj.provenance
            a = fam.entries[closure.objects[i].oid]
            b = fam.entries[closure.objects[j].oid]
            n, m2 = a.rows, b.rows
            c = fam.entries[obj.oid]
            ok = all(
                c.data[r][s]
                == (
                    a.data[r][s]
                    if r < n and s < n
                    else b.data[r - n][s - n] if r >= n and s >= n else Fraction(0)
                )
                for r in range(n + m2)
                for s in range(n + m2)
            )
            if not ok:
                violations.append({"kind": "sum_block", "object": obj.oid})
    nat = check_naturality(closure, fam, limit=limit)
    violations.extend(nat.violations)
    return MembershipResult(ok=not violations, violations=violations[:limit])


class InconsistentFunctional(ValueError):
    def __init__(self, violations):
        self.violations = violations
        super().__init__(f"functional is not multiplicative/natural: {violations}")


def eval_functional(closure: CategoryClosure, fam: NatFamily) -> dict[str, QMatrix]:
    """Values of the evaluation homomorphism on the standard matrix
    coefficients: entry (i, j) of the object block is the value on the
    coefficient of (i-th dual basis vector, j-th basis vector)."""
    return {o.oid: fam.entries[o.oid] for o in closure.objects}


def specm_point_to_nat(closure: CategoryClosure, values: dict[str, QMatrix]) -> NatFamily:
    """Reconstruct a monoid element from a multiplicative functional given
    by its values on the spanning matrix coefficients; reject inconsistent
    functionals with a witness."""
    entries = {}
    for obj in closure.objects:
        if obj.oid not in values:
            raise ValueError(f"functional gives no values on object {obj.oid}")
        entries[obj.oid] = values[obj.oid]
    fam = NatFamily(entries)
    res = m_membership(closure, fam)
    if not res.ok:
        raise InconsistentFunctional(res.violations)
    return fam


def is_central(
    closure: CategoryClosure, lie_basis: Sequence[NatFamily], cand: NatFamily
) -> bool:
    """True iff the candidate commutes with every solved Lie basis family
    on every object."""
    for x in lie_basis:
        for obj in closure.objects:
            a = cand.entries[obj.oid]
            b = x.entries[obj.oid]
            if a * b != b * a:
                return False
    return True


# ---------------------------------------------------------------------------
# Peter-Weyl rank accounting

@dataclass
class PeterWeylReport:
    expected_dim: int
    achieved_rank: int
    previous_rank: int
    stabilized: bool
    ok: bool
    commutant_dims: dict[str, int]


def peter_weyl_check(
    closure_or_algebra, irreducibles: Sequence[ModuleDesc], bound: int
) -> PeterWeylReport:
    """Rank of the evaluation of all standard matrix coefficients of the
    irreducibles on PBW monomials of degree <= bound, against the expected
    dimension sum dim(V)^2 / dim End(V)."""
    if isinstance(closure_or_algebra, CategoryClosure):
        g = closure_or_algebra.algebra
    else:
        g = closure_or_algebra
    commutants = {}
    for v in irreducibles:
        cert = irreducibility(v)
        if not cert.irreducible:
            raise ValueError(f"module {v.mid} is not certified irreducible")
        commutants[v.mid] = cert.commutant_dim
    for a in range(len(irreducibles)):
        for b in range(len(irreducibles)):
            if a != b and hom_space(irreducibles[a], irreducibles[b]):
                raise ValueError(
                    f"modules {irreducibles[a].mid} and {irreducibles[b].mid} are isomorphic"
                )
    expected = 0
    for v in irreducibles:
        q, r = divmod(v.dim ** 2, commutants[v.mid])
        if r:
            raise ValueError("commutant dimension does not divide dim^2")
        expected += q
    monos = monomials_upto(g.dim, bound)
    prev_cols = sum(1 for e in monos if sum(e) <= bound - 1)
    rows = []
    for v in irreducibles:
        table = pbw_matrix_table(v, bound)
        for i in range(v.dim):
            for j in range(v.dim):
                rows.append([table[e].data[i][j] for e in monos])
    m = QMatrix(rows, cols=len(monos))
    achieved = rank(m)
    prev = rank(QMatrix([r[:prev_cols] for r in rows], cols=prev_cols))
    stabilized = achieved == prev
    return PeterWeylReport(
        expected_dim=expected,
        achieved_rank=achieved,
        previous_rank=prev,
        stabilized=stabilized,
        ok=(achieved == expected and stabilized),
        commutant_dims=commutants,
    )


# ---------------------------------------------------------------------------
# Isotypic assembly

class CommutantCompatibilityError(ValueError):
    pass


class DecompositionError(ValueError):
    pass


def _isotypic_isomorphism(
    obj: ModuleDesc, irreducibles: Sequence[ModuleDesc]
) -> tuple[QMatrix, list[str]]:
    """Isomorphism from a sum of the listed irreducibles onto obj, as the
    column-stacked matrix of one hom basis per embedded copy."""
    cols: list[QMatrix] = []
    labels: list[str] = []
    for irr in irreducibles:
        for h in hom_space(irr, obj):
            cols.append(h)
            labels.append(irr.mid)
    if not cols:
        raise DecompositionError(f"object {obj.mid} has no component in the given irreducibles")
    total = sum(h.cols for h in cols)
    if total != obj.dim:
        raise DecompositionError(
            f"object {obj.mid}: components span dimension {total}, need {obj.dim}"
        )
    stacked = cols[0]
    for h in cols[1:]:
        stacked = stacked.hstack(h)
    if not is_invertible(stacked):
        raise DecompositionError(f"object {obj.mid}: chosen embeddings are not a direct sum")
    return stacked, labels


def nat_from_irr_components(
    closure: CategoryClosure,
    irreducibles: Sequence[ModuleDesc],
    components: dict[str, QMatrix],
) -> NatFamily:
    """Assemble a natural family from one matrix per irreducible.

    Each component must commute with the commutant of its irreducible; each
    closure object must decompose as a sum of the listed irreducibles.  The
    result does not depend on the chosen decomposition isomorphisms.
    """
    for irr in irreducibles:
        comp = components[irr.mid]
        if comp.rows != irr.dim or comp.cols != irr.dim:
            raise ValueError(f"component for {irr.mid} has wrong shape")
        for c in hom_space(irr, irr):
            if comp * c != c * comp:
                raise CommutantCompatibilityError(
                    f"component for {irr.mid} does not commute with its commutant"
                )
    entries = {}
    for obj in closure.objects:
        alpha, labels = _isotypic_isomorphism(obj.module, irreducibles)
        block_rows: list[list[Fraction]] = []
        offset = 0
        size = alpha.cols
        blocks: list[tuple[int, QMatrix]] = []
        for label in labels:
            comp = components[label]
            blocks.append((offset, comp))
            offset += comp.rows
        rows = [[Fraction(0)] * size for _ in range(size)]
        for off, comp in blocks:
            for r in range(comp.rows):
                for c in range(comp.cols):
                    rows[off + r][off + c] = comp.data[r][c]
        entries[obj.oid] = alpha * QMatrix(rows, cols=size) * inverse(alpha)
    fam = NatFamily(entries)
    nat = check_naturality(closure, fam)
    if not nat.ok:
        raise AssertionError(f"assembled family is not natural: {nat.violations}")
    return fam


def extract_irr_components(
    closure: CategoryClosure, irreducibles: Sequence[ModuleDesc], fam: NatFamily
) -> dict[str, QMatrix]:
    """Read the per-irreducible component off a family; the irreducibles
    must occur as closure objects (matched by id)."""
    out = {}
    for irr in irreducibles:
        out[irr.mid] = fam.entries[irr.mid]
    return out
