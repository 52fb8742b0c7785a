"""
Command-line interface.

    quasimodular expand Q2 --order 8 --format csv
    quasimodular verify systems --order 200
    quasimodular tau --which tau2 --n 5 --method eta
    quasimodular scan tau2-mod24 --upto 2000
    quasimodular dims --p 3 --k 6
    quasimodular basis --group 2 --k 8 --check
    quasimodular sturm --group 3 --k 6
"""

import argparse
import json
import sys

from . import export, modspace, tau, verify
from .errors import DomainError, NotPrime, UnknownName, UnknownRule
from .forms import FORM_NAMES, Group, catalog

EXPAND_ORDER = 64
SCAN_UPTO = 10000
MIN_SERIES_ORDER = 8

# exit codes
OK, FAILED, BAD_NAME, BAD_FORMAT = 0, 1, 2, 3

TAU_METHODS = {"eta": "eta_product", "recursion": "log_recursion", "formula": "explicit_formula"}


def _global_flags(parser, top):
    # on subcommands the flags default to SUPPRESS so they don't clobber values given before the subcommand
    default = None if top else argparse.SUPPRESS
    parser.add_argument("--order", type=int, default=default, help="series precision N (terms below q^N)")
    parser.add_argument("--format", default=default, help="output format: " + ", ".join(export.FORMATS))
    parser.add_argument("--quiet", action="store_true", default=False if top else argparse.SUPPRESS,
                        help="print only failures and the final status")


def build_parser():
    p = argparse.ArgumentParser(prog="quasimodular", description="Exact q-expansions and identity checks for quasi-modular forms.")
    _global_flags(p, True)
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, False)

    s = sub.add_parser("expand", parents=[common], help="print a q-expansion")
    s.add_argument("name", help="one of: " + ", ".join(FORM_NAMES))

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=("all",) + verify.SUITES)

    s = sub.add_parser("tau", parents=[common], help="tau-type coefficients")
    s.add_argument("--which", choices=tau.WHICH, default="tau")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=tuple(TAU_METHODS) + ("crosscheck",), default="eta")

    s = sub.add_parser("scan", parents=[common], help="scan a congruence rule")
    s.add_argument("rule", help="rule name, or 'all'")
    s.add_argument("--upto", type=int, default=SCAN_UPTO)

    s = sub.add_parser("dims", parents=[common], help="invariants of X0(p) and dimensions")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("basis", parents=[common], help="monomial basis of M_k")
    s.add_argument("--group", required=True, help="1, 2, 3 or a group name")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--check", action="store_true", help="also check linear independence")

    s = sub.add_parser("sturm", parents=[common], help="coefficient bound for weight-k forms")
    s.add_argument("--group", required=True)
    s.add_argument("--k", type=int, required=True)
    return p


def _err(msg):
    print("error: " + msg, file=sys.stderr)


def cmd_expand(args, out):
    order = EXPAND_ORDER if args.order is None else args.order
    fmt = args.format or "csv"
    if order < 1:
        _err("--order must be at least 1")
        return BAD_FORMAT
    try:
        form = catalog(args.name, order)
    except UnknownName as e:
        _err(e.args[0])
        return BAD_NAME
    try:
        out.write(export.render(form.series, fmt))
    except export.FormatError as e:
        _err(str(e))
        return BAD_FORMAT
    return OK


def cmd_verify(args, out):
    order = args.order
    # the symbolic suites ignore the precision, so only series suites need a sensible one
    if order is not None and order < MIN_SERIES_ORDER and args.suite not in ("sl2", "pushforward", "bases"):
        _err("--order must be at least %d for series suites" % MIN_SERIES_ORDER)
        return FAILED
    checks = verify.run_suite(args.suite, order)
    failed = [c for c in checks if not c.passed]
    if args.format == "json":
        rows = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
        out.write(json.dumps(rows, indent=1) + "\n")
    else:
        for c in checks:
            if not args.quiet or not c.passed:
                out.write(c.line() + "\n")
        out.write("%d/%d checks passed\n" % (len(checks) - len(failed), len(checks)))
    return FAILED if failed else OK


def cmd_tau(args, out):
    if args.n < 1:
        _err("--n must be at least 1")
        return FAILED
    if args.method != "crosscheck":
        value = tau.tau_table(args.which, args.n, TAU_METHODS[args.method])[args.n]
        out.write("%d\n" % value)
        return OK
    values = {m: tau.tau_table(args.which, args.n, TAU_METHODS[m])[args.n] for m in TAU_METHODS}
    agree = len(set(values.values())) == 1
    for m in TAU_METHODS:
        if not args.quiet:
            out.write("%s(%d) by %s: %d\n" % (args.which, args.n, m, values[m]))
    out.write("agreement\n" if agree else "MISMATCH\n")
    return OK if agree else FAILED


def cmd_scan(args, out):
    if args.upto < 1:
        _err("--upto must be at least 1")
        return FAILED
    if args.rule == "all":
        reports = tau.scan_all(args.upto)
    else:
        try:
            reports = [tau.congruence_scan(args.rule, args.upto)]
        except UnknownRule as e:
            _err(e.args[0])
            return BAD_NAME
    for r in reports:
        if not args.quiet or not r.ok:
            out.write(r.message() + "\n")
    return OK if all(r.ok for r in reports) else FAILED


def cmd_dims(args, out):
    try:
        inv = modspace.x0p_invariants(args.p)
        dm = modspace.dim_modular(args.p, args.k)
        dc = modspace.dim_cusp(args.p, args.k)
    except (NotPrime, DomainError) as e:
        _err(str(e))
        return BAD_NAME
    data = {
        "p": inv.p, "index": inv.index, "eps2": inv.eps2, "eps3": inv.eps3,
        "genus": inv.genus, "cusps": inv.cusps, "k": args.k,
        "dim_modular": dm, "dim_cusp": dc,
    }
    if args.format == "json":
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        for key, value in data.items():
            out.write("%s %d\n" % (key, value))
    return OK


def _group(text):
    try:
        return Group.parse(text)
    except ValueError as e:
        _err(str(e))
        return None


def _monomial_text(names, exps):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append("%s^%d" % (name, e))
    return " ".join(parts) or "1"


def cmd_basis(args, out):
    group = _group(args.group)
    if group is None:
        return BAD_NAME
    names = modspace.MODULAR_GENERATORS[group]
    for exps in modspace.monomial_basis(group, args.k):
        out.write(_monomial_text(names, exps) + "\n")
    if args.check:
        if args.k < 2 or args.k % 2:
            _err("--check needs an even weight >= 2")
            return FAILED
        rep = modspace.verify_independence(group, args.k)
        out.write("rank %d, dimension %d, coefficients 0..%d: %s\n"
                  % (rep.rank, rep.dimension, rep.bound, "PASS" if rep.passed else "FAIL"))
        return OK if rep.passed else FAILED
    return OK


def cmd_sturm(args, out):
    group = _group(args.group)
    if group is None:
        return BAD_NAME
    try:
        out.write("%d\n" % modspace.sturm_bound(group, args.k))
    except DomainError as e:
        _err(str(e))
        return BAD_NAME
    return OK


COMMANDS = {
    "expand": cmd_expand,
    "verify": cmd_verify,
    "tau": cmd_tau,
    "scan": cmd_scan,
    "dims": cmd_dims,
    "basis": cmd_basis,
    "sturm": cmd_sturm,
}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if args.format is not None and args.format not in export.FORMATS:
        _err("unknown format %r; choose from %s" % (args.format, ", ".join(export.FORMATS)))
        return BAD_FORMAT
    return COMMANDS[args.command](args, out)


if __name__ == "__main__":
    sys.exit(main())
