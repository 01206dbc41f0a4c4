"""rankcrank command line: compute tables, verify identities, discover relations.

Exit codes: 0 pass, 1 verification failure, 2 usage, 3 expectation mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from sympy import isprime

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EXPECT = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _s(x) -> str:
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


def _plain(c: str) -> str:
    return c[:-2] if c.endswith("/1") else c


# --------------------------------------------------------------------------
# compute
# --------------------------------------------------------------------------

def _need(args, name):
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"--{name.replace('_', '-')} is required here")
    return v


def cmd_compute(args) -> tuple[list[str], list[list]]:
    """(header, rows) of exact values."""
    from . import partitions as pt
    from .moments import moment_rows, C, R
    from .quasimodular import eisenstein, phi_series
    from .series import eta_power, partition_numbers

    what = args.what
    if what == "p":
        if args.n is not None:
            return ["n", "p"], [[args.n, pt.partition_count(args.n)]]
        ps = partition_numbers(args.n_max)
        return ["n", "p"], [[k, ps[k]] for k in range(args.n_max + 1)]
    if what in ("N", "M"):
        n = _need(args, "n")
        if n < 0:
            raise UsageError("--n must be nonnegative")
        kind = pt.RANK if what == "N" else pt.CRANK
        table = pt.stat_table(kind, n) if n <= 60 else pt.series_table(kind, n)
        if args.m is not None:
            return ["m", "n", what], [[args.m, n, table[args.m]]]
        return ["m", what], [[m, c] for m, c in sorted(table.counts.items())]
    if what == "moment":
        if args.j is None:
            header, rows = moment_rows(args.n_max)
            return header, rows
        if args.j < 2 or args.j % 2:
            raise UsageError("--j must be even and >= 2")
        s = (R if args.kind == "rank" else C)(args.j, args.n_max)
        name = ("N" if args.kind == "rank" else "M") + str(args.j)
        return ["n", name], [[k, s[k]] for k in range(1, args.n_max + 1)]
    if what == "phi":
        j = _need(args, "j")
        if j < 1 or j % 2 == 0:
            raise UsageError("--j must be odd and positive")
        s = phi_series(j, args.order)
        return ["n", f"Phi{j}"], [[k, s[k]] for k in range(args.order + 1)]
    if what == "eisenstein":
        k = _need(args, "k")
        if k < 2 or k % 2:
            raise UsageError("--k must be even and >= 2")
        s = eisenstein(k, args.order)
        return ["n", f"E{k}"], [[i, s[i]] for i in range(args.order + 1)]
    if what == "eta":
        r = _need(args, "r")
        s = eta_power(r, args.order)
        return ["n", f"p_{r}"], [[i, s[i]] for i in range(args.order + 1)]
    raise UsageError(f"unknown quantity {what!r}")


def _emit_table(header, rows, fmt) -> str:
    if fmt == "json":
        return json.dumps({"header": header, "rows": [[_s(x) for x in r] for r in rows]}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_s(x) for x in r])
        return buf.getvalue()
    cells = [header] + [[_s(x) for x in r] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    return "".join("  ".join(c.rjust(wd) for c, wd in zip(row, widths)) + "\n" for row in cells)


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------

def _verify_job(job):
    from .checks import report_dicts, run_target

    name, order, n_max = job
    return name, report_dicts(run_target(name, order, n_max))


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("RANKCRANK_THREADS", "1")))
    except ValueError:
        return 1


def cmd_verify(args) -> tuple[str, int]:
    from .checks import TARGETS

    targets = list(TARGETS) if args.target == "all" else [args.target]
    jobs = [(t, args.order, args.n_max) for t in targets]
    workers = min(_threads(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_verify_job, jobs))  # map keeps submission order
    else:
        results = [_verify_job(j) for j in jobs]
    reports = [r for _, rs in results for r in rs]
    ok = all(r["status"] == "pass" for r in reports)
    status = "pass" if ok else "fail"
    fmt = args.output
    if fmt == "json":
        text = json.dumps({"target": args.target, "order": args.order, "n_max": args.n_max,
                           "status": status, "reports": reports}, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theorem", "identity", "modulus", "range", "status", "first_failure"])
        for r in reports:
            w.writerow(_report_row(r))
        text = buf.getvalue()
    else:
        lines = []
        for r in reports:
            row = _report_row(r)
            lines.append(f"{r['status'].upper():4}  {row[0]:<15} {row[1]:<34} {row[3]}"
                         + (f"  mod {row[2]}" if row[2] else "")
                         + (f"  first failure: {row[5]}" if row[5] else ""))
        bad = sum(r["status"] != "pass" for r in reports)
        lines.append(f"{len(reports) - bad}/{len(reports)} checks passed")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_FAIL


def _report_row(r: dict) -> list[str]:
    group = r.get("theorem") or r.get("identity", "")
    label = r.get("identity", "") if "theorem" in r else ""
    if "n_range" in r:
        rng = f"n={r['n_range'][0]}..{r['n_range'][1]}"
    elif r.get("order") is not None:
        rng = f"order={r['order']}"
    else:
        rng = ""
    fails = r.get("failures") or ([r["first_failure"]] if r.get("first_failure") else [])
    first = json.dumps(fails[0], sort_keys=True) if fails else ""
    return [group, label, str(r.get("modulus") or ""), rng, r["status"], first]


# --------------------------------------------------------------------------
# discover
# --------------------------------------------------------------------------

def cmd_discover(args) -> tuple[str, int]:
    from . import relations as rel

    try:
        basis = rel.parse_basis(args.basis)
        target = rel.Term.parse(args.target) if args.target else None
    except ValueError as e:
        raise UsageError(str(e)) from e
    p = args.modulus
    out: dict = {"target": args.target, "basis": [t.name for t in basis], "order": args.order,
                 "modulus": p}
    code = EXIT_OK
    if target is None:
        deps = rel.find_dependencies(basis, args.order, p)
        out["verdict"] = "dependent" if deps else "independent"
        out["relations"] = [d.to_dict() for d in deps]
        if not deps and args.expect_relation:
            code = EXIT_EXPECT
    else:
        try:
            r = rel.discover_relation(target, basis, args.order, p)
        except rel.NoRelation as e:
            out["verdict"] = "independent"
            out["detail"] = str(e)
            if args.expect_relation:
                code = EXIT_EXPECT
        else:
            out["verdict"] = "relation"
            out["relation"] = r.to_dict()
            if p is None and (target.kind == "eta23" or (target.kind == "T" and target.dq == 0)):
                out["pointwise"] = _pointwise(rel, r, target, args.order)
    if args.output == "json":
        return json.dumps(out, indent=2) + "\n", code
    lines = [f"target: {out['target'] or '(none)'}", f"basis: {' '.join(out['basis'])}",
             f"order: {args.order}" + (f"  modulus: {p}" if p else ""), f"verdict: {out['verdict']}"]
    if "relation" in out:
        for name, c in zip(out["relation"]["basis"], out["relation"]["coefficients"]):
            if c != "0/1":
                lines.append(f"  {_plain(c):>40}  {name}")
        lines.append(f"verified through q^{out['relation']['residual_checked_to']}")
    for d in out.get("relations", []):
        lines.append("  " + " + ".join(f"{_plain(c)}*{b}" for c, b in zip(d["coefficients"], d["basis"])
                                       if c != "0/1")
                     + ("   [trivial]" if d.get("trivial") else ""))
    if "pointwise" in out:
        pw = out["pointwise"]
        lines.append(f"pointwise: {pw['symbol']}(n) =")
        for s, cs in pw["form"].items():
            lines.append(f"  {s}: [{', '.join(map(_plain, cs))}]  (coefficients of n^0, n^1, ...)")
    if "detail" in out:
        lines.append(out["detail"])
    return "\n".join(lines) + "\n", code


def _pointwise(rel, r, target, order):
    upto = 5 if target.kind == "eta23" else min(target.j - 1, 5)
    known = rel.derive_moment_identities(max(order, 30), upto=upto) if upto >= 2 else {}
    sym, form = rel.moment_relation_to_pointwise(r, known)
    return {"symbol": sym, "form": form.to_dict()}


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=40, help="q-series truncation order")
    common.add_argument("--n-max", type=int, default=100, help="largest n for pointwise checks and tables")
    common.add_argument("--modulus", type=int, default=None, help="work modulo this prime")
    common.add_argument("--output", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", default=None, help="write output to FILE instead of stdout")

    ap = argparse.ArgumentParser(prog="rankcrank", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="exact tables")
    c.add_argument("what", choices=("p", "N", "M", "moment", "phi", "eisenstein", "eta"))
    c.add_argument("--n", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--j", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--kind", choices=("rank", "crank"), default="crank")

    from .checks import TARGETS
    v = sub.add_parser("verify", parents=[common], help="check identities and congruences")
    v.add_argument("target", choices=TARGETS + ("all",))

    d = sub.add_parser("discover", parents=[common], help="find linear relations")
    d.add_argument("--target", default=None, help="e.g. T5, dT6, eta23, C4")
    d.add_argument("--basis", required=True, help="'+'-joined tokens; C<k> is the crank family of level k")
    d.add_argument("--expect-relation", action="store_true")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.order < 1 or args.n_max < 0:
            raise UsageError("--order must be >= 1 and --n-max >= 0")
        if args.modulus is not None and not isprime(args.modulus):
            raise UsageError("--modulus must be a prime")
        if args.command == "compute":
            text, code = _emit_table(*cmd_compute(args), args.output), EXIT_OK
        elif args.command == "verify":
            text, code = cmd_verify(args)
        else:
            text, code = cmd_discover(args)
    except (UsageError, ValueError) as e:
        print(f"rankcrank: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
