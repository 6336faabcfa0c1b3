"""biset-kit: batch CLI over the library.

Exit codes: 0 all requested checks pass, 1 verification failure, 2 usage or
parse error, 3 resource cap exceeded. Output is deterministic for a fixed
seed and configuration (keys sorted, canonical orders everywhere).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import burnside, bisets, center as center_mod, decomp as decomp_mod, green, verify
from .burnside import BurnsideElement, convert
from .config import Caps
from .errors import BisetKitError, CapExceeded, SpecParseError
from .green import PAMorphism, RepresentableModule
from .groups import (
    FiniteGroup,
    Subgroup,
    direct_product,
    generated_subgroup,
    product_group,
    subgroup_lattice,
    trivial_group,
)
from .groupspec import GroupRegistry

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CAPS = 3


def _registry(args) -> GroupRegistry:
    caps = Caps(ambient=args.cap_ambient, lattice=args.cap_lattice, closure=args.cap_closure)
    reg = GroupRegistry(caps=caps)
    path = os.environ.get("BISETKIT_GROUPS")
    if path:
        reg.load_file(path)
    return reg


def _caps(args) -> Caps:
    if min(args.cap_ambient, args.cap_lattice, args.cap_closure) <= 0:
        raise SpecParseError("caps must be positive")
    return Caps(ambient=args.cap_ambient, lattice=args.cap_lattice, closure=args.cap_closure)


def _family_groups(args, reg: GroupRegistry) -> tuple[FiniteGroup, ...] | None:
    if not args.family:
        return None
    return tuple(reg.resolve(part) for part in args.family.split(","))


def burnside_to_json(x: BurnsideElement) -> dict:
    return {
        "group": x.group.name,
        "terms": [
            {"subgroup": list(members), "coeff": str(c)} for members, c in x.terms()
        ],
    }


def burnside_from_json(obj: dict, group: FiniteGroup) -> BurnsideElement:
    coeffs = {}
    for term in obj["terms"]:
        members = tuple(sorted(int(m) for m in term["subgroup"]))
        coeffs[members] = Fraction(term["coeff"])
    raw = BurnsideElement(group, coeffs)
    return convert(raw, group)


def biset_to_json(b: bisets.BisetElement) -> dict:
    return {
        "left": b.left.name,
        "right": b.right.name,
        "terms": [
            {"stab_members": list(t.stab.members), "coeff": str(c)} for t, c in b.terms()
        ],
    }


def biset_from_json(obj: dict, left: FiniteGroup, right: FiniteGroup) -> bisets.BisetElement:
    out = bisets.zero_element(left, right)
    p = direct_product(left, right)
    for term in obj["terms"]:
        stab = Subgroup(p, term["stab_members"])
        out = out + Fraction(term["coeff"]) * bisets.transitive(left, right, stab)
    return out


def _emit(args, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        _emit_table(payload)


def _emit_table(payload: dict, indent: int = 0) -> None:
    pad = "  " * indent
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            print(f"{pad}{key}:")
            _emit_table(value, indent + 1)
        elif isinstance(value, list):
            print(f"{pad}{key}:")
            for item in value:
                if isinstance(item, dict):
                    _emit_table(item, indent + 1)
                    print(f"{pad}  -")
                elif isinstance(item, list):
                    print(f"{pad}  {' '.join(str(x) for x in item)}")
                else:
                    print(f"{pad}  {item}")
        else:
            print(f"{pad}{key}: {value}")


def cmd_group(args) -> int:
    reg = _registry(args)
    if args.action == "list":
        names = ["trivial", "C2", "C3", "C4", "C5", "S3", "S4", "S5", "V4"] + reg.names()
        out = []
        for name in names:
            grp = reg.resolve(name)
            out.append({"name": name, "order": grp.order})
        _emit(args, {"groups": out})
        return EXIT_OK
    grp = reg.resolve(args.expr)
    lat = subgroup_lattice(grp, caps=_caps(args))
    payload = {
        "name": grp.name,
        "order": grp.order,
        "abelian": grp.is_abelian,
        "labels": [grp.label(i) for i in grp.elements()],
        "subgroups": len(lat.subgroups),
        "classes": [{"members": list(r.members), "order": r.order} for r in lat.reps],
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_marks(args) -> int:
    reg = _registry(args)
    grp = reg.resolve(args.expr)
    caps = _caps(args)
    lat = subgroup_lattice(grp, caps=caps)
    tom = burnside.table_of_marks(grp, caps=caps)
    payload = {
        "group": grp.name,
        "classes": [list(r.members) for r in lat.reps],
        "matrix": [[str(v) for v in row] for row in tom],
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_idempotents(args) -> int:
    reg = _registry(args)
    grp = reg.resolve(args.expr)
    caps = _caps(args)
    lat = subgroup_lattice(grp, caps=caps)
    idem = burnside.idempotents(grp, caps=caps)
    payload = {
        "group": grp.name,
        "idempotents": [
            {
                "class": list(lat.reps[cls].members),
                "element": burnside_to_json(idem[cls]),
            }
            for cls in sorted(idem)
        ],
    }
    _emit(args, payload)
    return EXIT_OK


def _parse_biset_spec(spec: str, reg: GroupRegistry, caps: Caps) -> bisets.BisetElement:
    """`op(EXPR; gens) * op(EXPR; gens) * ...`, composed left to right."""
    factors = []
    for raw in spec.split("*"):
        term = raw.strip()
        op, _, rest = term.partition("(")
        op = op.strip()
        if not rest.endswith(")"):
            raise SpecParseError(f"missing closing parenthesis in {term!r}")
        body = rest[:-1]
        expr, _, genpart = body.partition(";")
        grp = reg.resolve(expr)
        gens = [int(p) for p in genpart.replace(",", " ").split()] if genpart.strip() else []
        if op == "id":
            factors.append(bisets.identity_biset(grp, caps=caps))
            continue
        sub = generated_subgroup(grp, gens + [grp.identity])
        if op == "ind":
            factors.append(bisets.ind(grp, sub, caps=caps))
        elif op == "res":
            factors.append(bisets.res(sub, grp, caps=caps))
        elif op == "inf":
            factors.append(bisets.inf(grp, sub, caps=caps))
        elif op == "def":
            factors.append(bisets.def_(grp, sub, caps=caps))
        else:
            raise SpecParseError(f"unknown biset term {op!r} (use id/ind/res/inf/def)")
    if not factors:
        raise SpecParseError("empty composition spec")
    return factors


def cmd_compose(args) -> int:
    reg = _registry(args)
    caps = _caps(args)
    factors = _parse_biset_spec(args.spec, reg, caps)
    set_result = factors[0]
    mackey_result = factors[0]
    for f in factors[1:]:
        set_result = bisets.compose(set_result, f, caps=caps)
        mackey_result = bisets.mackey_compose(mackey_result, f, caps=caps)
    agree = set_result == mackey_result
    _emit(
        args,
        {
            "engines_agree": agree,
            "set_level": biset_to_json(set_result),
            "mackey": biset_to_json(mackey_result),
        },
    )
    return EXIT_OK if agree else EXIT_VERIFY


def cmd_pa_compose(args) -> int:
    reg = _registry(args)
    caps = _caps(args)
    inst = green.get_instance(args.functor, reg.resolve)
    factors = _parse_biset_spec(args.spec, reg, caps)
    morphisms = []
    for f in factors:
        hg = direct_product(f.left, f.right, caps=caps)
        payload = green.upsilon(inst, hg, burnside.as_burnside(f, hg), caps=caps)
        morphisms.append(PAMorphism(inst, f.right, f.left, payload))
    result = morphisms[0]
    for m in morphisms[1:]:
        result = green.pa_compose(result, m, caps=caps)
    hom_obj = direct_product(result.target, result.source, caps=caps)
    _emit(
        args,
        {
            "functor": inst.name,
            "source": result.source.name,
            "target": result.target.name,
            "value": burnside_to_json(result.value),
            "coords": [str(c) for c in inst.coords(result.value, hom_obj)],
        },
    )
    return EXIT_OK


def cmd_commutant(args) -> int:
    reg = _registry(args)
    caps = _caps(args)
    inst = green.get_instance(args.functor, reg.resolve)
    grp = reg.resolve(args.expr)
    fam_groups = _family_groups(args, reg) or (
        trivial_group(),
        reg.resolve("C2"),
        reg.resolve("C3"),
        reg.resolve("V4"),
    )
    family = center_mod.GroupFamily(tuple(fam_groups), caps)
    basis = center_mod.commutant_subspace(inst, grp, family)
    reports = [
        center_mod.commutant_report(inst, v, grp, family).to_json() for v in basis
    ]
    _emit(
        args,
        {
            "functor": inst.name,
            "group": grp.name,
            "family": family.names(),
            "dimension": len(basis),
            "full_space": len(basis) == inst.dim(grp),
            "basis": [burnside_to_json(v) for v in basis],
            "reports": reports,
        },
    )
    return EXIT_OK


def cmd_center_check(args) -> int:
    reg = _registry(args)
    caps = _caps(args)
    with open(args.file, encoding="utf-8") as fh:
        data = json.load(fh)
    inst = green.get_instance(data["functor"], reg.resolve)
    shift = reg.resolve(data["shift"])
    fam_groups = tuple(reg.resolve(n) for n in data["family"])
    family = center_mod.GroupFamily(fam_groups, caps)
    components = []
    for grp, comp in zip(fam_groups, data["components"]):
        target = inst.carrier(product_group(grp, shift, grp, caps=caps))
        components.append(burnside_from_json(comp, target))
    cand = center_mod.CenterCandidate(inst, shift, family, tuple(components))
    report = center_mod.is_center_element(cand)
    _emit(args, report.to_json())
    return EXIT_OK if report.verdict else EXIT_VERIFY


def cmd_decompose(args) -> int:
    reg = _registry(args)
    caps = _caps(args)
    inst = green.get_instance(args.functor, reg.resolve)
    if isinstance(inst, green.ShiftedFunctor):
        fam = decomp_mod.burnside_shift_family(inst, caps=caps)
    else:
        fam = decomp_mod.IdempotentFamily(inst, (inst.unit(),), ("e[unit]",))
    groups = [reg.resolve(part) for part in args.groups.split(",")]
    module = RepresentableModule(inst)
    report = decomp_mod.decompose(module, fam, groups, caps=caps)
    _emit(args, report.to_json())
    return EXIT_OK if report.verdict else EXIT_VERIFY


def cmd_verify(args) -> int:
    reg = _registry(args)
    caps = _caps(args)
    family = _family_groups(args, reg)
    try:
        report = verify.run_suites([args.suite], seed=args.seed, caps=caps, family=family)
    except KeyError:
        raise SpecParseError(
            f"unknown suite {args.suite!r}; choose from {', '.join(sorted(verify.SUITES))}, all"
        )
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for check in report["checks"]:
            status = "PASS" if check["ok"] else "FAIL"
            detail = f": {check['detail']}" if not check["ok"] and check.get("detail") else ""
            print(f"{status} {check['name']}{detail}")
        print(f"verdict: {'pass' if report['verdict'] else 'fail'}")
    return EXIT_OK if report["verdict"] else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--family", default="")
    common.add_argument("--cap-ambient", type=int, default=5000)
    common.add_argument("--cap-lattice", type=int, default=200)
    common.add_argument("--cap-closure", type=int, default=2000)

    parser = argparse.ArgumentParser(prog="biset-kit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", parents=[common], help="list or show groups")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("expr", nargs="?", default="trivial")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("marks", parents=[common], help="table of marks")
    p.add_argument("expr")
    p.set_defaults(func=cmd_marks)

    p = sub.add_parser("idempotents", parents=[common], help="primitive idempotents of QB(G)")
    p.add_argument("expr")
    p.set_defaults(func=cmd_idempotents)

    p = sub.add_parser("compose", parents=[common], help="compose elementary bisets, both engines")
    p.add_argument("spec")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("pa-compose", parents=[common], help="compose morphisms in P_A")
    p.add_argument("--functor", default="burnside")
    p.add_argument("spec")
    p.set_defaults(func=cmd_pa_compose)

    p = sub.add_parser("commutant", parents=[common], help="commutant subspace of A(G)")
    p.add_argument("--functor", default="burnside")
    p.add_argument("expr")
    p.set_defaults(func=cmd_commutant)

    p = sub.add_parser("center-check", parents=[common], help="verify a center candidate file")
    p.add_argument("file")
    p.set_defaults(func=cmd_center_check)

    p = sub.add_parser("decompose", parents=[common], help="idempotent block decomposition")
    p.add_argument("--functor", required=True)
    p.add_argument("--groups", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPS
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BisetKitError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
