"""``corepart`` command-line interface.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 budget exceeded.
JSON output writes every integer as a decimal string and every rational as
``{"num": "...", "den": "..."}``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import genfunc, moments, partitions, suites
from .exceptions import BudgetExceededError, CorepartError
from .moments import GTable

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Output:
    """Scalars print as ``key: value`` lines; ``rows`` forms the table."""

    fields: dict
    header: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    rows_key: str = "rows"
    exit_code: int = EXIT_OK
    rows_in_json: bool = True


def _jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return {"num": str(x.numerator), "den": str(x.denominator)}
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _text(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return ""
    if isinstance(x, (list, tuple)):
        return "[" + ",".join(_text(v) for v in x) + "]"
    return str(x)


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        payload = dict(out.fields)
        if out.header and out.rows_in_json:
            payload[out.rows_key] = [dict(zip(out.header, r)) for r in out.rows]
        return json.dumps(_jsonable(payload), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if out.header:
            w.writerow(out.header)
            w.writerows([[_text(v) for v in r] for r in out.rows])
        else:
            w.writerow(list(out.fields))
            w.writerow([_text(v) for v in out.fields.values()])
        return buf.getvalue()
    lines = [f"{k}: {_text(v)}" for k, v in out.fields.items()]
    if out.header:
        lines.append("\t".join(out.header))
        lines.extend("\t".join(_text(v) for v in r) for r in out.rows)
    return "\n".join(lines) + "\n"


def _nonneg(name, v):
    if v < 0:
        raise UsageError(f"{name} must be non-negative")


def _positive(name, v):
    if v < 1:
        raise UsageError(f"{name} must be positive")


def cmd_seq(args, table) -> Output:
    _positive("d", args.d)
    _nonneg("nmax", args.nmax)
    if args.nmax > args.budget_n:
        raise BudgetExceededError(f"nmax {args.nmax} exceeds --budget-n {args.budget_n}")
    rows = [[n, moments.m_seq(args.d, n), moments.n_seq(args.d, n)] for n in range(1, args.nmax + 1)]
    return Output({"d": args.d}, ["n", "M", "N"], rows)


def cmd_enumerate(args, table) -> Output:
    _positive("n", args.n)
    _positive("t", args.t)
    cores = partitions.enumerate_core(args.n, args.t, distinct=args.distinct, budget=args.budget_oracle)
    sizes = [p.size for p in cores]
    fields = {"n": args.n, "t": args.t, "distinct": args.distinct, "count": len(cores),
              "total_size": sum(sizes), "max_size": max(sizes)}
    return Output(fields, ["size", "parts"], [[p.size, list(p.parts)] for p in cores], "partitions")


def cmd_moments(args, table) -> Output:
    _positive("d", args.d)
    _positive("k", args.k)
    if args.n > args.budget_n:
        raise BudgetExceededError(f"n {args.n} exceeds --budget-n {args.budget_n}")
    method = "oracle" if args.method == "bruteforce" else args.method
    r = moments.moment(args.family, args.d, args.n, args.k, method=method, table=table,
                       budget=args.budget_oracle)
    return Output({"family": args.family, "d": args.d, "n": args.n, "k": args.k,
                   "method": args.method, "power_sum": r.power_sum, "count": r.count,
                   "expectation": r.expectation})


def _series_agree(reference, compute) -> bool | None:
    try:
        return compute() == reference
    except ArithmeticError:
        return False


def cmd_gf(args, table) -> Output:
    _positive("d", args.d)
    _nonneg("order", args.order)
    if args.order > args.budget_order:
        raise BudgetExceededError(f"order {args.order} exceeds --budget-order {args.budget_order}")
    if args.mode == "psi":
        _nonneg("m", args.m)
        _nonneg("a", args.a)
        _nonneg("b", args.b)
        series = genfunc.psi_series_dp(args.d, args.m, args.a, args.b, args.order, table)
        which = (args.a, args.b)
        agree = {"closedform": _series_agree(series, lambda: genfunc.psi_closed(args.d, args.m, which, args.order))
                 if which in genfunc.PSI_CLOSED else None}
        fields = {"mode": "psi", "d": args.d, "m": args.m, "a": args.a, "b": args.b, "order": args.order}
    else:
        _positive("k", args.k)
        series = genfunc.inv_power_expand(args.d, args.k, args.order, "direct")
        agree = {
            "partialfraction": _series_agree(series, lambda: genfunc.inv_power_expand(
                args.d, args.k, args.order, "partialfraction")),
            "mbasis": _series_agree(series, lambda: genfunc.inv_power_expand(
                args.d, args.k, args.order, "mbasis")) if args.k <= 3 else None,
        }
        fields = {"mode": "invpower", "d": args.d, "k": args.k, "order": args.order}
    coeffs = list(series.as_integers())
    fields["coefficients"] = coeffs
    fields.update({f"agree_{k}": v for k, v in agree.items()})
    code = EXIT_FAIL if any(v is False for v in agree.values()) else EXIT_OK
    return Output(fields, ["n", "coefficient"], [[i, c] for i, c in enumerate(coeffs)],
                  "series", exit_code=code, rows_in_json=False)


def cmd_verify(args, table) -> Output:
    rep = suites.run_suite(args.suite, table)
    rows = [[c.id, c.status, c.expected, c.actual] for c in rep.checks]
    code = EXIT_OK if rep.status == "pass" else EXIT_FAIL
    return Output({"suite": rep.suite}, ["id", "status", "expected", "actual"], rows, "checks",
                  exit_code=code)


def _verify_render(out: Output, fmt: str) -> str:
    # keep the documented key order: suite, checks, status
    if fmt == "json":
        status = "pass" if out.exit_code == EXIT_OK else "fail"
        payload = {"suite": out.fields["suite"],
                   "checks": [dict(zip(out.header, r)) for r in out.rows],
                   "status": status}
        return json.dumps(payload, indent=2) + "\n"
    text = render(out, fmt)
    if fmt == "plain":
        text += f"status: {'pass' if out.exit_code == EXIT_OK else 'fail'}\n"
    return text


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    # on subparsers the defaults are suppressed so the top-level values win
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("json", "csv", "plain"), default=dflt("plain"))
    p.add_argument("--budget-oracle", type=int, default=dflt(partitions.DEFAULT_ORACLE_BUDGET),
                   help="max candidates examined by brute-force enumeration")
    p.add_argument("--budget-n", type=int, default=dflt(2000), help="max n for the DP")
    p.add_argument("--budget-order", type=int, default=dflt(500), help="max series order")
    p.add_argument("--seed", type=int, default=dflt(None),
                   help="accepted and ignored; output is deterministic")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="corepart", description="Exact moments of simultaneous core partitions with distinct parts.")
    _global_flags(p, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("seq", parents=[common], help="M_d(n) and N_d(n) for n = 1..nmax")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--nmax", type=int, required=True)

    s = sub.add_parser("enumerate", parents=[common], help="list (n, t)-core partitions")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--distinct", action="store_true")

    s = sub.add_parser("moments", parents=[common], help="power sum, count and expectation of the size")
    s.add_argument("--family", choices=moments.FAMILIES, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--method", choices=("dp", "bruteforce", "closedform"), default="dp")

    s = sub.add_parser("gf", parents=[common], help="generating-function coefficients")
    s.add_argument("--mode", choices=("psi", "invpower"), required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--a", type=int, default=0)
    s.add_argument("--b", type=int, default=0)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--order", type=int, required=True)

    s = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    s.add_argument("suite", choices=suites.SUITES + ("all",))
    return p


COMMANDS = {"seq": cmd_seq, "enumerate": cmd_enumerate, "moments": cmd_moments,
            "gf": cmd_gf, "verify": cmd_verify}


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        for name in ("budget_oracle", "budget_n", "budget_order"):
            _nonneg(name.replace("_", "-"), getattr(args, name))
        out = COMMANDS[args.command](args, GTable())
    except UsageError as e:
        print(f"corepart: error: {e}", file=stderr)
        return EXIT_USAGE
    except BudgetExceededError as e:
        print(f"corepart: budget exceeded: {e}", file=stderr)
        return EXIT_BUDGET
    except (ValueError, CorepartError) as e:
        print(f"corepart: error: {e}", file=stderr)
        return EXIT_USAGE
    text = _verify_render(out, args.format) if args.command == "verify" else render(out, args.format)
    stdout.write(text)
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
