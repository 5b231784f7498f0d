"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
3 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import enumeration as en
from .classify import PreconditionError, classify, nonclass_witness
from .machine import first_pass, run_machine
from .paths import (
    DyckPath,
    PathError,
    SchroderPath,
    av213_from_dyck,
    dyck_from_av213,
    phi,
    psi,
    render_ascii,
    render_svg,
    schroder_from_sortable123,
    sortable123_from_schroder,
)
from .perms import NotationError, Permutation, parse
from .tables import TABLE_NAMES, reproduce, row_matches

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3
FORMATS = ("text", "json", "csv", "bfile")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _perm_arg(text: str) -> Permutation:
    try:
        return parse(text)
    except NotationError as e:
        raise argparse.ArgumentTypeError(f"bad permutation {text!r}: {e}")


def _sigma(args) -> Permutation:
    if args.sigma is None:
        raise UsageError("--sigma is required for this command")
    return args.sigma


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    return en.default_workers()


def _emit_sequences(reports: list[en.SequenceReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in reports], indent=2)
    if fmt == "bfile":
        return "\n\n".join(f"# {r.name}\n{r.bfile()}" for r in reports)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "n", "value", "method"])
        for r in reports:
            for i, v in enumerate(r.values):
                w.writerow([r.name, r.offset + i, v, r.method])
        return buf.getvalue().rstrip("\n")
    lines = []
    for r in reports:
        idx = range(r.offset, r.offset + len(r.values))
        lines.append(f"{r.name} [{r.method}]")
        lines.append("  n: " + " ".join(f"{i:>7}" for i in idx))
        lines.append("     " + " ".join(f"{v:>7}" for v in r.values))
        if r.checks:
            lines.append("  checks: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in r.checks.items()))
    return "\n".join(lines)


# --- commands -------------------------------------------------------------

def cmd_sort(args) -> int:
    sigma = _sigma(args)
    out, trace = run_machine(args.perm, sigma)
    ok = out == Permutation.identity(len(out))
    if args.format == "json":
        payload = {"input": str(args.perm), "sigma": str(sigma), "sortable": ok, "output": str(out),
                   "first_pass": str(first_pass(args.perm, sigma))}
        if args.trace:
            payload["trace"] = trace.to_records()
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print("sortable" if ok else "not sortable")
        print(f"output {out}")
        if args.trace:
            print(trace.to_text())
    return EXIT_OK


def cmd_trace(args) -> int:
    _, trace = run_machine(args.perm, _sigma(args))
    print(trace.to_json() if args.format == "json" else trace.to_text())
    return EXIT_OK


def cmd_firstpass(args) -> int:
    out = first_pass(args.perm, _sigma(args))
    if args.format == "json":
        print(json.dumps({"input": str(args.perm), "sigma": str(args.sigma), "first_pass": str(out)}))
    else:
        print(out)
    return EXIT_OK


def cmd_classify(args) -> int:
    status = classify(args.pattern, allow_short=args.allow_short)
    if args.format == "json":
        print(status.to_json())
    elif status.is_class:
        print(f"{status.verdict}: Sort({status.sigma}) = Av({', '.join(map(str, status.basis))})")
    else:
        alpha, pat = status.witness
        print(f"{status.verdict}: {alpha} is sortable but its pattern {pat} is not")
    return EXIT_OK


def cmd_witness(args) -> int:
    alpha = nonclass_witness(args.pattern)
    if args.format == "json":
        print(json.dumps({"sigma": str(args.pattern), "alpha": str(alpha)}))
    else:
        print(alpha)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    sigma = _sigma(args)
    kw = dict(workers=_threads(args), extended=args.extended)
    if args.list:
        en.check_budget(args.max_n, args.extended)
        members = en.brute_sortable(sigma, args.max_n, "list", **kw)
        if args.format == "json":
            print(json.dumps([str(p) for p in members]))
        else:
            print("\n".join(map(str, members)))
        return EXIT_OK
    values = [en.brute_sortable(sigma, n, **kw) for n in range(args.max_n + 1)]
    rep = en.SequenceReport(f"Sort({sigma})", 0, values, "brute")
    print(_emit_sequences([rep], args.format))
    return EXIT_OK


SEQUENCE_NAMES = ("catalan", "a", "sort123", "height:K", "rho:K")


def _sequence_reports(name: str, order: int, extended: bool, workers: int) -> list[en.SequenceReport]:
    if name == "catalan":
        f = en.SequenceReport("catalan", 0, en.catalan(order), "formula")
        g = en.SequenceReport("catalan", 0, en.catalan_gf(order).coeffs, "gf")
        f.checks["gf"] = f.agrees_with(g)
        return [f, g]
    if name == "a":
        f = en.SequenceReport("a", 0, en.a_seq(order), "formula")
        g = en.SequenceReport("a", 0, en.a_gf(order).coeffs, "gf")
        b = en.SequenceReport("a", 0, [en.a_brute(n) for n in range(min(order, 9) + 1)], "brute")
        f.checks.update(gf=f.agrees_with(g), brute=f.agrees_with(b))
        return [f, g, b]
    if name == "sort123":
        f = en.SequenceReport("Sort(123)", 0, en.sort123_count(order), "formula")
        g = en.SequenceReport("Sort(123)", 0, en.sort123_gf(order).coeffs, "gf")
        nb = min(order, en.EXTENDED_MAX_N if extended else en.DEFAULT_MAX_N)
        b = en.SequenceReport("Sort(123)", 0, [en.brute_sortable((1, 2, 3), n, workers=workers,
                                                                 extended=extended) for n in range(nb + 1)], "brute")
        f.checks.update(gf=f.agrees_with(g), brute=f.agrees_with(b))
        return [f, g, b]
    kind, _, k = name.partition(":")
    if kind in ("height", "rho") and k.isdigit():
        k = int(k)
        height = k if kind == "height" else k - 1
        if height < 0:
            raise UsageError("height must be nonnegative")
        g = en.SequenceReport(f"{name}", 0, en.bounded_height_count(height, order), "gf")
        d = en.SequenceReport(f"{name}", 0, en.dyck_height_dp(height, order), "formula")
        g.checks["dp"] = g.agrees_with(d)
        return [g, d]
    raise UsageError(f"unknown sequence {name!r}; choose from {', '.join(SEQUENCE_NAMES)}")


def cmd_sequence(args) -> int:
    reps = _sequence_reports(args.name, args.max_n, args.extended, _threads(args))
    print(_emit_sequences(reps, args.format))
    return EXIT_OK if all(all(r.checks.values()) for r in reps) else EXIT_MISMATCH


def cmd_table(args) -> int:
    kw = {}
    if args.name in ("paper:sec4", "paper:sec6"):
        en.check_budget(args.max_n, args.extended)
        kw = dict(workers=_threads(args), extended=args.extended)
    elif args.name == "paper:fig3":
        en.check_budget(args.max_n, True)
    rows = reproduce(args.name, args.max_n, **kw)
    ok = all(row_matches(r) for r in rows)
    if args.format == "json":
        print(json.dumps({"table": args.name, "max_n": args.max_n, "matches": ok, "rows": rows}, indent=2))
    else:
        for r in rows:
            mark = "ok " if row_matches(r) else "BAD"
            if "values" in r:
                label = f"k={r['k']}" if "k" in r else r["sigma"]
                print(f"{mark} {label:>6}: " + " ".join(str(v) for v in r["values"]))
            elif "gf" in r:
                print(f"{mark} {r['sigma']:>6}: " + " ".join(str(v) for v in r["avoidance"]))
            else:
                print(f"{mark} {r['sigma']}: {r['sortable']} sortable, {r['pattern']} not")
    return EXIT_OK if ok else EXIT_MISMATCH


def _looks_like_path(text: str) -> bool:
    t = "".join(text.split()).upper()
    return t == "" or set(t.replace("H2", "H")) <= set("UDH")


def cmd_bijection(args) -> int:
    mode, value = args.mode, args.value
    if mode == "phi":
        res = psi(value) if args.inverse else phi(value)
        print(json.dumps({"input": value, "output": str(res)}) if args.format == "json" else res)
        return EXIT_OK
    to_perm = _looks_like_path(value) if not args.inverse else True
    if args.inverse and not _looks_like_path(value):
        raise UsageError("--inverse expects a path")
    if mode == "dyck":
        res = av213_from_dyck(DyckPath(value)) if to_perm else dyck_from_av213(parse(value))
    else:
        res = sortable123_from_schroder(SchroderPath(value)) if to_perm else schroder_from_sortable123(parse(value))
    if args.format == "json":
        print(json.dumps({"mode": mode, "input": value, "output": str(res)}))
    else:
        print(res if str(res) else "(empty)")
    return EXIT_OK


def cmd_render(args) -> int:
    value = args.value
    if _looks_like_path(value):
        path = SchroderPath(value) if "H" in value.upper() else DyckPath(value)
        labels = None
        if isinstance(path, DyckPath):
            labels = av213_from_dyck(path)
    else:
        perm = parse(value)
        if args.kind == "dyck":
            path, labels = dyck_from_av213(perm), perm
        else:
            path, labels = schroder_from_sortable123(perm), perm
    style = args.render or "ascii"
    print(render_svg(path, labels) if style == "svg" else render_ascii(path, labels))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import verify_all

    progress = None if args.quiet else (lambda m: print(m, file=sys.stderr))
    report = verify_all(args.max_n, extended=args.extended, workers=_threads(args),
                        accept_errata=args.accept_errata, progress=progress)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for c in report["checks"]:
            status = "PASS" if c["passed"] else ("ERRATUM" if c["erratum"] else "FAIL")
            print(f"{status:8} {c['name']:<24} {c['seconds']:>8.2f}s  {c['detail']}")
        print("all checks passed" if report["passed"] else "verification FAILED")
    return EXIT_OK if report["passed"] else EXIT_MISMATCH


# --- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sigma", type=_perm_arg, help="pattern restricting the first stack")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--max-n", type=int, default=8, dest="max_n")
    common.add_argument("--extended", action="store_true", help="allow n = 11 scans")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $SIGMA_LAB_THREADS or 1)")
    common.add_argument("--render", choices=("ascii", "svg"), default=None)

    p = _Parser(prog="sigma-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sort", parents=[common], help="run the sigma-machine on a permutation")
    s.add_argument("perm", type=_perm_arg)
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_sort)

    s = sub.add_parser("trace", parents=[common], help="move log of a sigma-machine run")
    s.add_argument("perm", type=_perm_arg)
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("firstpass", parents=[common], help="output of the sigma-avoiding stack alone")
    s.add_argument("perm", type=_perm_arg)
    s.set_defaults(func=cmd_firstpass)

    s = sub.add_parser("classify", parents=[common], help="is Sort(sigma) a permutation class?")
    s.add_argument("pattern", type=_perm_arg)
    s.add_argument("--allow-short", action="store_true", help="answer for |sigma| = 2")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("witness", parents=[common], help="sortable permutation containing 132")
    s.add_argument("pattern", type=_perm_arg)
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("enumerate", parents=[common], help="count Sort_n(sigma) for n <= max-n")
    s.add_argument("--list", action="store_true", help="list Sort_{max-n}(sigma) instead")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("sequence", parents=[common], help="named sequence, computed several ways")
    s.add_argument("name", help=", ".join(SEQUENCE_NAMES))
    s.set_defaults(func=cmd_sequence)

    s = sub.add_parser("table", parents=[common], help="reproduce a table from the source")
    s.add_argument("name", choices=TABLE_NAMES)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("bijection", parents=[common], help="dyck | schroder | phi, either direction")
    s.add_argument("mode", choices=("dyck", "schroder", "phi"))
    s.add_argument("value")
    s.add_argument("--inverse", action="store_true",
                   help="path -> permutation (dyck/schroder), or psi for phi")
    s.set_defaults(func=cmd_bijection)

    s = sub.add_parser("render", parents=[common], help="draw a path, or the path of a permutation")
    s.add_argument("value")
    s.add_argument("--kind", choices=("dyck", "schroder"), default="schroder",
                   help="which bijection to use when given a permutation")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("verify", parents=[common], help="run every cross-check within the budget")
    s.add_argument("--accept-errata", action="store_true",
                   help="do not fail on checks against misprinted expressions")
    s.add_argument("--quiet", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # usage errors and --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if getattr(args, "threads", None) is None and os.environ.get("SIGMA_LAB_THREADS"):
        args.threads = en.default_workers()
    if args.max_n < 0:
        print("error: --max-n must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except en.BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, NotationError, PathError, PreconditionError, ValueError, IndexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
