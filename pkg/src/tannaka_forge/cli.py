"""Command-line entry point.

All inputs are JSON files (or builtin:NAME references to the bundled
corpus); all outputs are canonical JSON reports.  Exit codes: 0 success,
1 mathematical rejection (report carries the witness), 2 input error.
No environment variables are read; randomized checks take an explicit
--seed that is echoed in the report.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import builtin, jsonio
from .jordan import SingularOnImageError, additive_jc, classify, multiplicative_jc
from .jsonio import SCHEMA, canonical_json
from .liealg import full_subalgebra, subalgebra, validate
from .nilgrp import NilpotencyClassError, bch, bch_group
from .oneparam import (
    NotNilpotentError,
    NotTorusDiagonalError,
    eigenvalue_monoid,
    exp_family,
    torus_family,
)
from .repn import check_module
from .tannaka import (
    ClosureCapExceeded,
    build_closure,
    closure_summary,
    lie_m_report,
    m_membership,
    peter_weyl_check,
)
from .toric import ToricRejection, faces, idempotent_of_face, toric_structure_report
from .uea import matrix_coefficient


class InputError(Exception):
    pass


class Rejection(Exception):
    def __init__(self, payload: dict):
        self.payload = payload
        super().__init__(str(payload))


def _load_json(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _load_algebra(ref: str, check_axioms: bool = True):
    if ref.startswith("builtin:"):
        name = ref.split(":", 1)[1]
        try:
            return builtin.BUILTIN_ALGEBRAS[name]()
        except KeyError as exc:
            raise InputError(f"no bundled algebra named {name!r}") from exc
    data = _load_json(ref)
    try:
        g = jsonio.algebra_from_json(data)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"{ref}: {exc}") from exc
    if check_axioms:
        bad = validate(g)
        if bad:
            raise InputError(f"{ref}: algebra axioms fail at {bad[:3]}")
    return g


def _load_modules(g, refs: list[str]):
    out = []
    for ref in refs:
        if ref.startswith("builtin:"):
            parts = ref.split(":")
            if len(parts) != 3:
                raise InputError("builtin module reference must be builtin:ALGEBRA:MODULE")
            _, alg_name, mid = parts
            try:
                _, mods = builtin.builtin_modules(alg_name)
                candidate = mods[mid]
            except KeyError as exc:
                raise InputError(f"no bundled module {ref!r}") from exc
            if candidate.algebra != g:
                raise InputError(f"bundled module {ref!r} belongs to a different algebra")
            out.append(candidate)
            continue
        data = _load_json(ref)
        try:
            out.append(jsonio.module_from_json(g, data))
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"{ref}: {exc}") from exc
    return out


def _parse_vector(text: str, dim: int):
    try:
        data = json.loads(text)
        vec = jsonio.vector_from_json(data)
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        raise InputError(f"bad vector {text!r}: {exc}") from exc
    if len(vec) != dim:
        raise InputError(f"vector {text!r} has length {len(vec)}, expected {dim}")
    return vec


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {text!r}") from exc


def _closure_from_args(args):
    g = _load_algebra(args.algebra)
    mods = _load_modules(g, args.modules or [])
    try:
        closure = build_closure(g, mods, depth=args.depth, max_objects=args.max_objects)
    except ClosureCapExceeded as exc:
        raise Rejection({"ok": False, "error": "closure_cap_exceeded", "detail": str(exc)})
    return g, closure


def cmd_validate(args) -> dict:
    g = _load_algebra(args.algebra, check_axioms=False)
    violations = validate(g)
    result = {
        "ok": not violations,
        "algebra_violations": [list(map(str, v)) for v in violations],
        "modules": [],
    }
    if args.modules:
        mods_ok = True
        for ref in args.modules:
            if ref.startswith("builtin:"):
                mod = _load_modules(g, [ref])[0]
                bad = []
            else:
                data = _load_json(ref)
                mats = []
                try:
                    for name in g.basis_names:
                        mats.append(jsonio.matrix_from_json(data["action"][name]))
                except (KeyError, ValueError, TypeError) as exc:
                    raise InputError(f"{ref}: {exc}") from exc
                bad = check_module(g, mats)
            result["modules"].append({"ref": ref, "violations": [list(p) for p in bad]})
            mods_ok = mods_ok and not bad
        result["ok"] = result["ok"] and mods_ok
    if not result["ok"]:
        raise Rejection(result)
    return result


def cmd_closure(args) -> dict:
    _, closure = _closure_from_args(args)
    return {"ok": True, **closure_summary(closure)}


def cmd_lie_m(args) -> dict:
    g = _load_algebra(args.algebra)
    mods = _load_modules(g, args.modules or [])
    try:
        rep = lie_m_report(g, mods, depth=args.depth, max_objects=args.max_objects)
    except ClosureCapExceeded as exc:
        raise Rejection({"ok": False, "error": "closure_cap_exceeded", "detail": str(exc)})
    return {
        "ok": True,
        "depth": args.depth,
        "lie_m_dim": rep["lie_m_dim"],
        "stabilized": rep["stabilized"],
        "basis": [jsonio.family_to_json(f)["entries"] for f in rep["basis"]],
    }


def cmd_membership(args) -> dict:
    _, closure = _closure_from_args(args)
    fam = jsonio.family_from_json(_load_json(args.family))
    try:
        res = m_membership(closure, fam)
    except ValueError as exc:
        raise InputError(str(exc))
    if not res.ok:
        raise Rejection({"ok": False, "certified": False, "violations": res.violations})
    return {"ok": True, "certified": True, "violations": []}


def cmd_jordan(args) -> dict:
    m = jsonio.matrix_from_json(_load_json(args.matrix))
    if not m.is_square():
        raise InputError("matrix must be square")
    if args.idempotent:
        e = jsonio.matrix_from_json(_load_json(args.idempotent))
        try:
            dec = multiplicative_jc(m, e)
        except SingularOnImageError as exc:
            raise Rejection(
                {
                    "ok": False,
                    "error": "singular_on_image",
                    "witness": jsonio.vector_to_json(exc.witness),
                }
            )
        except ValueError as exc:
            raise InputError(str(exc))
        return {
            "ok": True,
            "e": jsonio.matrix_to_json(dec.e),
            "s": jsonio.matrix_to_json(dec.s),
            "u": jsonio.matrix_to_json(dec.u),
        }
    dec = additive_jc(m)
    cls = classify(m)
    return {
        "ok": True,
        "s": jsonio.matrix_to_json(dec.s),
        "n": jsonio.matrix_to_json(dec.n),
        "classify": {
            "semisimple": cls.semisimple,
            "nilpotent": cls.nilpotent,
            "unipotent": cls.unipotent,
            "weak_locally_unipotent": cls.weak_locally_unipotent,
        },
    }


def cmd_exp(args) -> dict:
    g, closure = _closure_from_args(args)
    x = _parse_vector(args.generator, g.dim)
    t = _parse_rational(args.t)
    try:
        fam = exp_family(closure, x, t)
    except NotNilpotentError as exc:
        raise Rejection(
            {"ok": False, "error": "not_nilpotent", "witness_object": exc.object_id}
        )
    return {"ok": True, "t": str(t), "family": jsonio.family_to_json(fam)["entries"]}


def cmd_torus(args) -> dict:
    g, closure = _closure_from_args(args)
    h = _parse_vector(args.generator, g.dim)
    s = _parse_rational(args.s)
    if s == 0:
        raise InputError("torus parameter must be nonzero")
    try:
        fam = torus_family(closure, h, s)
        ev = eigenvalue_monoid(closure, h)
    except NotTorusDiagonalError as exc:
        raise Rejection(
            {"ok": False, "error": "not_torus_diagonalizable", "witness_object": exc.object_id}
        )
    return {
        "ok": True,
        "s": str(s),
        "eigenvalue_monoid": ev,
        "family": jsonio.family_to_json(fam)["entries"],
    }


def cmd_bch(args) -> dict:
    g = _load_algebra(args.algebra)
    if args.sub:
        data = _load_json(args.sub)
        basis = [jsonio.vector_from_json(v) for v in data["basis"]]
        try:
            sub = subalgebra(g, basis)
        except ValueError as exc:
            raise InputError(str(exc))
    else:
        sub = full_subalgebra(g)
    try:
        grp = bch_group(g, sub)
    except NilpotencyClassError as exc:
        raise Rejection({"ok": False, "error": "not_nilpotent_or_class_too_high", "detail": str(exc)})
    x = _parse_vector(args.x, g.dim)
    y = _parse_vector(args.y, g.dim)
    try:
        z = bch(grp, x, y)
    except ValueError as exc:
        raise InputError(str(exc))
    return {
        "ok": True,
        "nilpotency_class": grp.nilpotency_class,
        "result": jsonio.vector_to_json(z),
    }


def cmd_toric_faces(args) -> dict:
    monoid = jsonio.monoid_from_json(_load_json(args.monoid))
    try:
        face_list = faces(monoid, generator_cap=args.generator_cap)
        report = toric_structure_report(monoid, seed=args.seed)
    except ToricRejection as exc:
        raise Rejection({"ok": False, "error": "toric_rejection", "detail": str(exc)})
    return {
        "ok": True,
        "monoid": jsonio.monoid_to_json(monoid),
        "faces": [
            {
                "members": list(f.members),
                "functional": jsonio.vector_to_json(f.functional)
                if f.functional is not None
                else None,
                "idempotent": jsonio.vector_to_json(idempotent_of_face(monoid, f).values),
            }
            for f in face_list
        ],
        "structure": report,
    }


def cmd_peter_weyl(args) -> dict:
    g = _load_algebra(args.algebra)
    mods = _load_modules(g, args.modules or [])
    try:
        rep = peter_weyl_check(g, mods, args.degree)
    except ValueError as exc:
        raise Rejection({"ok": False, "error": "precondition", "detail": str(exc)})
    result = {
        "ok": rep.ok,
        "expected_dim": rep.expected_dim,
        "achieved_rank": rep.achieved_rank,
        "previous_rank": rep.previous_rank,
        "stabilized": rep.stabilized,
        "commutant_dims": rep.commutant_dims,
        "degree": args.degree,
    }
    if not rep.ok:
        raise Rejection(result)
    return result


def cmd_mc(args) -> dict:
    g = _load_algebra(args.algebra)
    mods = _load_modules(g, [args.module])
    v_mod = mods[0]
    phi = _parse_vector(args.phi, v_mod.dim)
    v = _parse_vector(args.v, v_mod.dim)
    h = matrix_coefficient(v_mod, phi, v, args.degree)
    return {
        "ok": True,
        "module": v_mod.mid,
        "coefficient": jsonio.dual_element_to_json(h, g.basis_names),
    }


def cmd_examples(args) -> dict:
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for name in sorted(builtin.BUILTIN_ALGEBRAS):
        g, mods = builtin.builtin_modules(name)
        path = outdir / f"{name}.algebra.json"
        path.write_text(canonical_json(jsonio.algebra_to_json(g)))
        written.append(str(path))
        for mid, mod in sorted(mods.items()):
            mpath = outdir / f"{name}.{mid}.module.json"
            mpath.write_text(canonical_json(jsonio.module_to_json(mod)))
            written.append(str(mpath))
    from .toric import weight_monoid_from_generators

    nat2 = weight_monoid_from_generators([(1, 0), (0, 1)])
    mpath = outdir / "nat2.monoid.json"
    mpath.write_text(canonical_json(jsonio.monoid_to_json(nat2)))
    written.append(str(mpath))
    return {"ok": True, "written": written}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tannaka-forge",
        description="Exact Tannaka reconstruction for Lie algebras at desk scale.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, modules=True, closure=False):
        p.add_argument("--algebra", required=True, help="algebra JSON path or builtin:NAME")
        if modules:
            p.add_argument(
                "--modules",
                nargs="*",
                default=[],
                help="module JSON paths or builtin:ALGEBRA:MODULE",
            )
        if closure:
            p.add_argument("--depth", type=int, default=2)
            p.add_argument("--max-objects", type=int, default=64)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="write the report here instead of stdout")

    p = sub.add_parser("validate", help="check algebra axioms and module identities")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("closure", help="build a category closure and summarize it")
    common(p, closure=True)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("lie-m", help="solve for the Lie algebra of the closure")
    common(p, closure=True)
    p.set_defaults(func=cmd_lie_m)

    p = sub.add_parser("membership", help="certify a natural family as a monoid element")
    common(p, closure=True)
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_membership)

    p = sub.add_parser("jordan", help="Jordan-Chevalley decomposition of a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--idempotent", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_jordan)

    p = sub.add_parser("exp", help="one-parameter unipotent family exp(t x)")
    common(p, closure=True)
    p.add_argument("--generator", required=True, help="Lie coefficient vector as JSON")
    p.add_argument("--t", default="1")
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("torus", help="one-parameter torus family s^h")
    common(p, closure=True)
    p.add_argument("--generator", required=True, help="Lie coefficient vector as JSON")
    p.add_argument("--s", default="2")
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("bch", help="Baker-Campbell-Hausdorff group law")
    p.add_argument("--algebra", required=True)
    p.add_argument("--sub", default=None, help="JSON with a basis of a nilpotent subalgebra")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bch)

    p = sub.add_parser("toric-faces", help="face lattice and idempotents of a weight monoid")
    p.add_argument("--monoid", required=True)
    p.add_argument("--generator-cap", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_toric_faces)

    p = sub.add_parser("peter-weyl", help="matrix-coefficient rank accounting")
    common(p)
    p.add_argument("--degree", type=int, default=6)
    p.set_defaults(func=cmd_peter_weyl)

    p = sub.add_parser("mc", help="matrix coefficient as a truncated dual element")
    p.add_argument("--algebra", required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("examples", help="write the bundled example corpus as JSON")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_examples)

    return parser


def _emit(report: dict, args) -> None:
    text = canonical_json(report)
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    base = {"schema": SCHEMA, "command": args.command, "seed": getattr(args, "seed", 0)}
    try:
        result = args.func(args)
    except InputError as exc:
        _emit({**base, "ok": False, "error": "input", "detail": str(exc)}, args)
        return 2
    except Rejection as exc:
        _emit({**base, **exc.payload}, args)
        return 1
    _emit({**base, **result}, args)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
