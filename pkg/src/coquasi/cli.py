"""Command-line front end.

Exit status: 0 success, 1 an axiom failed (the report says which),
2 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import serialize as ser
from . import zoo as cz
from .comodcat import ZigzagError, check_comodule, check_dual, dual_comodule
from .cqb import NonUniquePreantipodeError, check_preantipode, solve_preantipode, validate_coquasi
from .exactla import FieldMismatchError, parse_field
from .qb import appendix_report, check_quasi_preantipode, finite_dual, function_algebra, solve_quasi_preantipode, validate_quasi
from .recon import DiagramError, reconstruct, validate_diagram
from .report import Report


class InputError(Exception):
    """Anything that should end in exit status 2."""


# helpers ------------------------------------------------------------------


def _load(path):
    try:
        return ser.read(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _field(args, *docs):
    if args.field:
        try:
            return parse_field(args.field)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    for doc in docs:
        fld = ser.detect_field(doc)
        if fld != cz.QQ:
            return fld
    return cz.QQ


def _structure(doc, fld, kind):
    if kind == "quasi":
        return ser.quasi_from_json(doc, fld)
    return ser.coquasi_from_json(doc, fld)


class Output:
    def __init__(self, args):
        self.args = args
        self.reports = []

    def report(self, rep: Report):
        self.reports.append(rep)

    def emit(self, doc=None) -> int:
        if doc is not None:
            text = ser.write(doc, self.args.output)
            if self.args.output is None:
                sys.stdout.write(text)
        for rep in self.reports:
            if self.args.report == "json":
                sys.stdout.write(ser.dumps(rep.to_json()))
            else:
                print(rep.render_text())
        return 0 if all(r.passed for r in self.reports) else 1


def _preantipode_or_solve(args, fld, n, quasi, solve):
    if getattr(args, "preantipode", None):
        return ser.preantipode_from_json(_load(args.preantipode), fld, n, quasi)
    try:
        return solve()
    except NonUniquePreantipodeError as exc:
        rep = Report("preantipode")
        rep.fail("preantipode unique", (exc.nullity,))
        raise AxiomFailure(rep) from None


class AxiomFailure(Exception):
    def __init__(self, rep: Report):
        super().__init__(rep.render_text())
        self.report = rep


# commands -----------------------------------------------------------------


def cmd_validate(args) -> int:
    doc = _load(args.file)
    fld = _field(args, doc)
    out = Output(args)
    if args.kind == "coquasi":
        out.report(validate_coquasi(ser.coquasi_from_json(doc, fld)))
    elif args.kind == "quasi":
        out.report(validate_quasi(ser.quasi_from_json(doc, fld)))
    elif args.kind == "comodule":
        v = ser.comodule_from_json(doc, fld)
        rep = validate_coquasi(v.h)
        rep.merge(check_comodule(v), "comodule: ")
        out.report(rep)
    else:
        out.report(validate_diagram(ser.diagram_from_json(doc, fld)))
    return out.emit()


def cmd_preantipode(args) -> int:
    doc = _load(args.file)
    sdoc = _load(args.s_file) if args.action == "check" else None
    fld = _field(args, doc, sdoc)
    quasi = args.kind == "quasi"
    h = _structure(doc, fld, args.kind)
    out = Output(args)
    if args.action == "check":
        s = ser.preantipode_from_json(sdoc, fld, h.dim, quasi)
        out.report((check_quasi_preantipode if quasi else check_preantipode)(h, s))
        return out.emit()
    base = (validate_quasi if quasi else validate_coquasi)(h)
    if not base.passed:
        out.report(base)
        return out.emit()
    try:
        s = (solve_quasi_preantipode if quasi else solve_preantipode)(h)
    except NonUniquePreantipodeError as exc:
        rep = Report("preantipode")
        rep.fail("preantipode unique", (exc.nullity,))
        out.report(rep)
        return out.emit()
    rep = Report("preantipode")
    rep.require("preantipode exists", s is not None)
    out.report(rep)
    return out.emit(ser.preantipode_to_json(s) if s is not None else None)


def cmd_reconstruct(args) -> int:
    doc = _load(args.file)
    fld = _field(args, doc)
    d = ser.diagram_from_json(doc, fld)
    out = Output(args)
    rep = validate_diagram(d)
    if not rep.passed:
        out.report(rep)
        return out.emit()
    r = reconstruct(d, args.name)
    out.report(r.report)
    return out.emit(ser.coend_to_json(r.h, r.coend, r.S))


def cmd_finite_dual(args) -> int:
    doc = _load(args.file)
    fld = _field(args, doc)
    a = ser.quasi_from_json(doc, fld)
    out = Output(args)
    base = validate_quasi(a)
    if not base.passed:
        out.report(base)
        return out.emit()
    s = _preantipode_or_solve(args, fld, a.dim, True, lambda: solve_quasi_preantipode(a))
    h, sh = finite_dual(a, s)
    rep = validate_coquasi(h)
    if sh is not None:
        rep.merge(check_preantipode(h, sh), "preantipode: ")
    out.report(rep)
    res = ser.coquasi_to_json(h)
    if sh is not None:
        res["S"] = ser.matrix_to_json(sh.s_map)
    return out.emit(res)


def cmd_dualize_comodule(args) -> int:
    doc = _load(args.file)
    fld = _field(args, doc)
    v = ser.comodule_from_json(doc, fld)
    out = Output(args)
    base = validate_coquasi(v.h)
    base.merge(check_comodule(v), "comodule: ")
    if not base.passed:
        out.report(base)
        return out.emit()
    s = _preantipode_or_solve(args, fld, v.h.dim, False, lambda: solve_preantipode(v.h))
    if s is None:
        rep = Report("dual comodule")
        rep.fail("preantipode exists")
        out.report(rep)
        return out.emit()
    try:
        dd = dual_comodule(v, s)
    except ZigzagError as exc:
        rep = Report("dual comodule")
        rep.fail(str(exc.args[0]) if exc.args else "zigzag")
        out.report(rep)
        return out.emit()
    out.report(check_dual(dd))
    return out.emit(ser.dual_comodule_to_json(dd))


def cmd_appendix(args) -> int:
    doc = _load(args.file)
    fld = _field(args, doc)
    a = ser.quasi_from_json(doc, fld)
    out = Output(args)
    base = validate_quasi(a)
    if not base.passed:
        out.report(base)
        return out.emit()
    s = _preantipode_or_solve(args, fld, a.dim, True, lambda: solve_quasi_preantipode(a))
    if s is None:
        rep = Report("appendix")
        rep.fail("preantipode exists")
        out.report(rep)
        return out.emit()
    out.report(appendix_report(a, s))
    return out.emit()


_CYCLIC = re.compile(r"^z(\d+)$")


def parse_group(text: str) -> cz.Group:
    t = text.strip()
    p = Path(t)
    if p.suffix == ".json" or p.exists():
        doc = _load(p)
        table = doc.get("table") if isinstance(doc, dict) else doc
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise InputError(f"{t}: expected a multiplication table")
        g = cz.Group(p.stem, tuple(tuple(int(x) for x in r) for r in table))
    else:
        factors = t.lower().split("x")
        groups = []
        for f in factors:
            m = _CYCLIC.match(f)
            if m:
                groups.append(cz.cyclic(int(m.group(1))))
            elif f == "s3":
                groups.append(cz.symmetric3())
            else:
                raise InputError(f"unknown group {text!r}")
        g = groups[0]
        for h in groups[1:]:
            g = cz.direct_product(g, h)
        g = cz.Group(t, g.table)
    if not 1 <= g.order <= 16:
        raise InputError("group order must be between 1 and 16")
    try:
        g.validate()
    except ValueError as exc:
        raise InputError(f"group table: {exc}") from None
    return g


def parse_cocycle(text: str, g: cz.Group, fld):
    import numpy as np

    t = text.strip()
    n = g.order
    if t == "trivial":
        return cz.trivial_cocycle(g, fld)
    if t == "sign":
        if g.name.lower() == "s3":
            return cz.pullback_cocycle(cz.cyclic_cocycle(2, 1, -1, fld), cz.sign_s3, 6)
        if g.name.lower() == "z2xz2":
            z2 = cz.cyclic_cocycle(2, 1, -1, fld)
            return cz.product_cocycle(z2, z2) * cz.klein_mixed_cocycle(fld)
        if n % 2 == 0 and g == cz.Group(g.name, cz.cyclic(n).table):
            return cz.cyclic_cocycle(n, 1, -1, fld)
        raise InputError(f"no built-in sign cocycle for {g.name}")
    if t.startswith("cyclic:"):
        parts = t.split(":")
        if len(parts) != 3 or g.table != cz.cyclic(n).table:
            raise InputError("cyclic:<k>:<zeta> needs a cyclic group")
        try:
            return cz.cyclic_cocycle(n, int(parts[1]), fld(parts[2]), fld)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(str(exc)) from None
    doc = _load(t)
    flat = doc.get("cocycle") if isinstance(doc, dict) else doc
    return ser.vector_from_json(flat, fld, n**3, "cocycle").reshape(n, n, n)


def cmd_example(args) -> int:
    fld = _field(args)
    g = parse_group(args.group)
    w = parse_cocycle(args.cocycle, g, fld)
    rep = cz.check_cocycle(g, w)
    out = Output(args)
    if not rep.passed:
        out.report(rep)
        return out.emit()
    if args.which == "group-coquasi":
        h, s, _ = cz.gen_group_coquasi(cz.ZooSpec(g, w, fld, name=g.name), check=False)
        rep = validate_coquasi(h)
        rep.merge(check_preantipode(h, s), "preantipode: ")
        doc = ser.coquasi_to_json(h)
    else:
        a, s = function_algebra(g, w, fld)
        rep = validate_quasi(a)
        rep.merge(check_quasi_preantipode(a, s), "preantipode: ")
        doc = ser.quasi_to_json(a)
    doc["S"] = ser.matrix_to_json(s.s_map)
    out.report(rep)
    return out.emit(doc)


# parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="rational or fp:<p> (default: read from the data)")
    common.add_argument("-o", "--output", default=None, help="write the resulting structure here")
    common.add_argument("--report", choices=("json", "text"), default="text")

    # flags may come before or after the subcommand; the copy on each
    # subcommand must not reset values given earlier
    late = argparse.ArgumentParser(add_help=False)
    late.add_argument("--field", default=argparse.SUPPRESS)
    late.add_argument("-o", "--output", default=argparse.SUPPRESS)
    late.add_argument("--report", choices=("json", "text"), default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="coquasi", description="Exact coquasi-bialgebra and preantipode toolkit.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[late], help="check the axioms of a structure")
    v.add_argument("file")
    v.add_argument("--kind", choices=("coquasi", "quasi", "comodule", "diagram"), default="coquasi")
    v.set_defaults(func=cmd_validate)

    pa = sub.add_parser("preantipode", parents=[late], help="solve for or check a preantipode")
    pa.add_argument("action", choices=("solve", "check"))
    pa.add_argument("file")
    pa.add_argument("s_file", nargs="?")
    pa.add_argument("--kind", choices=("coquasi", "quasi"), default="coquasi")
    pa.set_defaults(func=cmd_preantipode)

    r = sub.add_parser("reconstruct", parents=[late], help="coend of a rigid monoidal diagram")
    r.add_argument("file")
    r.add_argument("--name", default="H")
    r.set_defaults(func=cmd_reconstruct)

    f = sub.add_parser("finite-dual", parents=[late], help="dual coquasi-bialgebra of a quasi-bialgebra")
    f.add_argument("file")
    f.add_argument("--preantipode", default=None)
    f.set_defaults(func=cmd_finite_dual)

    dc = sub.add_parser("dualize-comodule", parents=[late], help="right dual of a comodule")
    dc.add_argument("file")
    dc.add_argument("--preantipode", default=None)
    dc.set_defaults(func=cmd_dualize_comodule)

    ap = sub.add_parser("appendix-check", parents=[late], help="p/q identities and anti-multiplicativity")
    ap.add_argument("file")
    ap.add_argument("--preantipode", default=None)
    ap.set_defaults(func=cmd_appendix)

    ex = sub.add_parser("example", parents=[late], help="twisted group examples")
    ex.add_argument("which", choices=("group-coquasi", "group-quasi"))
    ex.add_argument("--group", default="Z2", help="Zn, products like Z2xZ2, S3, or a JSON table")
    ex.add_argument("--cocycle", default="sign", help="trivial, sign, cyclic:<k>:<zeta>, or a JSON file")
    ex.set_defaults(func=cmd_example)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "preantipode" and args.action == "check" and not args.s_file:
        parser.error("preantipode check needs the preantipode file")
    try:
        return args.func(args)
    except AxiomFailure as exc:
        out = Output(args)
        out.report(exc.report)
        return out.emit()
    except (InputError, ser.SchemaError, DiagramError, FieldMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
