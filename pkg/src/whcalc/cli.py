"""Command-line front end: verification subcommands with deterministic
JSON or plain-text reports.

Exit codes: 0 when every stage is verified/derived/assumed, 1 when any
stage failed, 2 for usage errors (unknown command, malformed input,
exceeded caps).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, abelian, falg, ktheory, lens, simplicial
from .groupring import (GroupRingElement, WhiteheadClass, invert_unit,
                        wh_class_equal)
from .report import ASSUMED, DERIVED, FAILED, VERIFIED, ReportDocument
from .torsion import HCobordismSymbol, compose, double, reverse

USAGE_ERROR = 2


class UsageError(Exception):
    pass


def _parse_coeffs(text):
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed coefficient list: {text!r}") from exc


_NAMED_TARGETS = {
    "z": [0], "z2": [2], "z3": [3], "z4": [4], "z6": [6],
    "z2xz2": [2, 2],
}


def _parse_target(name):
    """Named targets like z2-trivial / z4-sign, or inline presentation JSON."""
    if name.startswith("{"):
        try:
            return abelian.InvolutiveAbelianGroup.from_dict(json.loads(name))
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise UsageError(f"malformed group JSON: {exc}") from exc
    parts = name.lower().split("-")
    if len(parts) != 2 or parts[0] not in _NAMED_TARGETS \
            or parts[1] not in ("trivial", "sign"):
        raise UsageError(
            f"unknown target {name!r}; use e.g. z2-trivial, z4-sign, "
            "z2xz2-trivial or an inline JSON presentation")
    sign = 1 if parts[1] == "trivial" else -1
    return abelian.InvolutiveAbelianGroup.from_factors(
        _NAMED_TARGETS[parts[0]], sign)


def _document(command, params):
    return ReportDocument("whcalc", __version__, command, params)


# -- subcommand handlers --------------------------------------------------


def _cmd_unit_verify(args):
    doc = _document("unit verify", {"order": args.order, "coeffs": args.coeffs})
    x = GroupRingElement(args.order, _parse_coeffs(args.coeffs))
    inv = invert_unit(x)
    if inv is None:
        doc.add("unit-inverse", FAILED,
                {"element": x.to_dict(), "reason": "not a unit",
                 "augmentation": x.augmentation()})
    else:
        doc.add("unit-inverse", VERIFIED,
                {"element": x.to_dict(), "inverse": inv.to_dict()})
    return doc


def _cmd_wh_eq(args):
    doc = _document("wh eq", {"order": args.order, "x": args.x, "y": args.y})
    try:
        cx = WhiteheadClass(GroupRingElement(args.order, _parse_coeffs(args.x)))
        cy = WhiteheadClass(GroupRingElement(args.order, _parse_coeffs(args.y)))
    except ValueError as exc:
        doc.add("class-equality", FAILED, {"reason": str(exc)})
        return doc
    equal = wh_class_equal(cx, cy)
    doc.add("class-equality", DERIVED, {"equal": equal})
    return doc


def _cmd_homology(args):
    doc = _document("homology", {"target": args.target, "n": args.n})
    a = _parse_target(args.target)
    if args.n < 0:
        raise UsageError("homology degree must be nonnegative")
    h = abelian.homology_c2(a, args.n)
    doc.add("homology", DERIVED, h.to_dict())
    return doc


def _cmd_tate(args):
    doc = _document("tate", {"target": args.target, "n": args.n})
    a = _parse_target(args.target)
    h = abelian.tate_homology_c2(a, args.n)
    doc.add("tate-homology", DERIVED, h.to_dict())
    return doc


def _cmd_falg_pi(args):
    doc = _document("falg pi", {"target": args.target, "n": args.n})
    a = _parse_target(args.target)
    if args.n > 3:
        raise UsageError("homotopy degree is capped at n = 3")
    if a.order() is None:
        raise UsageError("falg pi requires a finite target")
    pi = falg.moore_homotopy(a, args.n)
    h = abelian.homology_c2(a, args.n)
    status = VERIFIED if pi == h else FAILED
    doc.add("homotopy-group", status,
            {"pi": pi.to_dict(), "independent_homology": h.to_dict()})
    return doc


def _cmd_falg_check(args):
    doc = _document("falg check", {})
    try:
        data = json.loads(args.element)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed element JSON: {exc}") from exc
    target = data.get("target")
    group = _parse_target(target) if isinstance(target, str) \
        else abelian.InvolutiveAbelianGroup.from_dict(target)
    try:
        el = falg.FAlgElement.from_dict(data, group)
    except ValueError as exc:
        doc.add("membership", FAILED, {"reason": str(exc)})
        return doc
    ok = True
    if el.functor.ambient <= 3:
        ok = falg.check_square(el.functor)
    doc.add("membership", VERIFIED if ok else FAILED,
            {"p": el.degree, "square_condition": ok})
    return doc


def _cmd_subcomplex_enum(args):
    doc = _document("subcomplex enum", {"p": args.p, "all": args.all})
    if args.p > 3:
        raise UsageError("exhaustive enumeration is capped at p = 3")
    if args.all:
        complexes = simplicial.enumerate_subcomplexes(args.p)
    else:
        complexes = simplicial.enumerate_contractible_subcomplexes(args.p)
    doc.add("enumeration", DERIVED,
            {"count": len(complexes),
             "complexes": [k.to_dict() for k in complexes]})
    return doc


def _parse_symbol(order, d, coeffs, twist):
    x = GroupRingElement(order, _parse_coeffs(coeffs))
    try:
        cls = WhiteheadClass(x)
    except ValueError as exc:
        raise UsageError(f"torsion is not a unit: {exc}") from exc
    return HCobordismSymbol(d, cls, twist)


def _cmd_torsion(args):
    doc = _document(f"torsion {args.op}",
                    {"d": args.d, "order": args.order, "op": args.op})
    w = _parse_symbol(args.order, args.d, args.u, args.twist)
    if args.op == "compose":
        if args.u2 is None:
            raise UsageError("compose needs --u2 (and optionally --twist2)")
        w2 = _parse_symbol(args.order, args.d, args.u2, args.twist2)
        result = compose(w, w2)
    elif args.op == "reverse":
        result = reverse(w)
    else:
        result = double(w)
    doc.add("symbol", DERIVED, result.to_dict())
    return doc


def _cmd_lens_inertia(args):
    doc = _document("lens inertia", {"p": args.p, "k": args.k})
    if args.max_p and args.p > args.max_p:
        raise UsageError(f"p exceeds the --max-p cap ({args.max_p})")
    space = lens.balanced_lens_space(args.p, args.k)
    unit = GroupRingElement(args.p, _parse_coeffs(args.unit)) \
        if args.unit else lens.standard_inertia_unit(args.p)
    iner = lens.inertia_set(space, WhiteheadClass(unit))
    doc.add("inertia-set", DERIVED,
            {"lens_space": str(space),
             "cardinality": iner.cardinality,
             "classes": [{"degrees": list(w),
                          "class": c.representative.to_dict()}
                         for c, w in zip(iner.classes, iner.witnesses)]})
    return doc


def _cmd_lens_report(args):
    if args.max_p and 7 > args.max_p:
        raise UsageError(f"p exceeds the --max-p cap ({args.max_p})")
    unit = _parse_coeffs(args.unit) if args.unit else None
    return lens.discrepancy_report(args.k, unit_coeffs=unit)


def _cmd_kapp_tor(args):
    doc = _document("kapp tor", {"p": args.p, "i": args.i})
    if args.max_p and args.p > args.max_p:
        raise UsageError(f"p exceeds the --max-p cap ({args.max_p})")
    group = ktheory.tor_pi_r(args.p, args.i)
    expected = [args.p] if args.i % 2 == 0 else []
    status = VERIFIED if list(group.invariant_factors) == expected else FAILED
    doc.add("periodic-resolution-homology", status, group.to_dict())
    return doc


def _cmd_kapp_k3(args):
    doc = _document("kapp k3", {"p": args.p})
    rep = ktheory.k3_divisibility(args.p)
    doc.add("divisibility", DERIVED, rep)
    for fact in ktheory.load_facts()["facts"]:
        if fact["id"] in ("k3-of-integers", "k3-of-prime-field"):
            doc.add(fact["id"], ASSUMED, {"statement": fact["statement"]},
                    citation=fact["citation"])
    return doc


# -- parser ----------------------------------------------------------------


def _flag_parent(defaults):
    parent = argparse.ArgumentParser(add_help=False)
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    parent.add_argument("--json", action="store_true",
                        help="emit the full report as JSON", **kw)
    parent.add_argument("--out", metavar="PATH",
                        help="write the report to a file instead of stdout",
                        **({"default": None} if defaults else kw))
    parent.add_argument("--max-p", type=int,
                        help="reject prime parameters above this cap",
                        **({"default": None} if defaults else kw))
    return parent


def build_parser():
    parser = argparse.ArgumentParser(
        prog="whcalc", parents=[_flag_parent(defaults=True)],
        description="exact verification of torsion calculus, homology of "
                    "the order-two symmetry, and lens-space inertia sets")
    sub = parser.add_subparsers(dest="group_cmd", required=True)

    # leaf parsers accept the same flags after the subcommand without
    # clobbering values already parsed before it
    common = _flag_parent(defaults=False)

    def leaf(subparsers, name, **kw):
        return subparsers.add_parser(name, parents=[common], **kw)

    unit = sub.add_parser("unit", help="group-ring unit operations")
    unit_sub = unit.add_subparsers(dest="action", required=True)
    uv = leaf(unit_sub, "verify", help="invert a unit exactly")
    uv.add_argument("--order", type=int, required=True)
    uv.add_argument("--coeffs", required=True)
    uv.set_defaults(handler=_cmd_unit_verify)

    wh = sub.add_parser("wh", help="Whitehead class operations")
    wh_sub = wh.add_subparsers(dest="action", required=True)
    whe = leaf(wh_sub, "eq", help="class equality modulo trivial units")
    whe.add_argument("--order", type=int, required=True)
    whe.add_argument("--x", required=True)
    whe.add_argument("--y", required=True)
    whe.set_defaults(handler=_cmd_wh_eq)

    hom = leaf(sub, "homology", help="homology of the order-two group")
    hom.add_argument("--target", required=True)
    hom.add_argument("--n", type=int, required=True)
    hom.set_defaults(handler=_cmd_homology)

    tate = leaf(sub, "tate", help="Tate homology in any degree")
    tate.add_argument("--target", required=True)
    tate.add_argument("--n", type=int, required=True)
    tate.set_defaults(handler=_cmd_tate)

    fa = sub.add_parser("falg", help="the simplicial-group model")
    fa_sub = fa.add_subparsers(dest="action", required=True)
    fpi = leaf(fa_sub, "pi", help="homotopy group against homology")
    fpi.add_argument("--target", required=True)
    fpi.add_argument("--n", type=int, required=True)
    fpi.set_defaults(handler=_cmd_falg_pi)
    fch = leaf(fa_sub, "check", help="validate a serialized simplex")
    fch.add_argument("--element", required=True,
                     help="JSON with p, target and face_values")
    fch.set_defaults(handler=_cmd_falg_check)

    sc = sub.add_parser("subcomplex", help="subcomplexes of a simplex")
    sc_sub = sc.add_subparsers(dest="action", required=True)
    sce = leaf(sc_sub, "enum", help="enumerate subcomplexes")
    sce.add_argument("--p", type=int, required=True)
    sce.add_argument("--all", action="store_true",
                     help="include non-contractible subcomplexes")
    sce.set_defaults(handler=_cmd_subcomplex_enum)

    tor = leaf(sub, "torsion", help="h-cobordism symbol calculus")
    tor.add_argument("op", choices=["compose", "reverse", "double"])
    tor.add_argument("--d", type=int, required=True)
    tor.add_argument("--order", type=int, required=True)
    tor.add_argument("--u", required=True, help="torsion unit coefficients")
    tor.add_argument("--twist", type=int, default=1)
    tor.add_argument("--u2", default=None)
    tor.add_argument("--twist2", type=int, default=1)
    tor.set_defaults(handler=_cmd_torsion)

    ln = sub.add_parser("lens", help="lens-space computations")
    ln_sub = ln.add_subparsers(dest="action", required=True)
    li = leaf(ln_sub, "inertia", help="inertia torsion classes")
    li.add_argument("--p", type=int, default=7)
    li.add_argument("--k", type=int, default=1)
    li.add_argument("--unit", default=None)
    li.set_defaults(handler=_cmd_lens_inertia)
    lr = leaf(ln_sub, "report-theorem-a",
              help="full cardinality-discrepancy pipeline")
    lr.add_argument("--k", type=int, required=True)
    lr.add_argument("--unit", default=None)
    lr.set_defaults(handler=_cmd_lens_report)

    ka = sub.add_parser("kapp", help="K-theory appendix arithmetic")
    ka_sub = ka.add_subparsers(dest="action", required=True)
    kt = leaf(ka_sub, "tor", help="periodic-resolution homology")
    kt.add_argument("--p", type=int, required=True)
    kt.add_argument("--i", type=int, required=True)
    kt.set_defaults(handler=_cmd_kapp_tor)
    kk = leaf(ka_sub, "k3", help="degree-three divisibility report")
    kk.add_argument("--p", type=int, required=True)
    kk.set_defaults(handler=_cmd_kapp_k3)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    args.max_p = getattr(args, "max_p", None)
    try:
        doc = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    text = doc.to_json() if args.json else doc.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return doc.exit_code()


if __name__ == "__main__":
    sys.exit(main())
