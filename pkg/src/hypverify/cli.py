"""Command-line front end.

Exit codes: 0 when every checked identity holds, 2 when at least one is
refuted, 1 on any usage, domain, parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .betaint import integral_representation, truncated_first_term_integral
from .checker import (
    claimed_closed_form, compare_identity, definitional_sum, frisch_sweep,
    search_counterexamples,
)
from .dsl import DslError, parse_identity_file, run_spec
from .identities import shipped_path
from .numeric import DomainError
from .params import ParamTriple

OK, ERROR, REFUTED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ERROR, f"{self.prog}: error: {message}\n")


def _emit(data) -> None:
    print(json.dumps(data, indent=2))


def _match(flag: bool) -> str:
    return "true" if flag else "false"


def cmd_check(args) -> int:
    report = compare_identity(ParamTriple(args.n, args.b, args.c))
    if args.json:
        _emit(report.as_dict())
    else:
        print(f"LHS: {report.lhs}")
        print(f"RHS: {report.rhs}")
        print(f"Match: {_match(report.equal)}")
        print(f"Difference: {report.difference}")
    return OK if report.equal else REFUTED


def _grid_bounds(args) -> None:
    if args.n_max < 0:
        raise UsageError(f"--n-max must be >= 0, got {args.n_max}")
    if args.b_max < 1:
        raise UsageError(f"--b-max must be >= 1, got {args.b_max}")


def cmd_search(args) -> int:
    _grid_bounds(args)
    found = search_counterexamples(args.n_max, args.b_max)
    if args.json:
        _emit([cx.as_dict() for cx in found])
    else:
        for cx in found:
            print(f"{cx.params}: {cx.difference}")
        print(f"{len(found)} counterexample{'' if len(found) == 1 else 's'}")
    return REFUTED if found else OK


def cmd_frisch(args) -> int:
    _grid_bounds(args)
    total, failures = frisch_sweep(args.n_max, args.b_max)
    if args.json:
        _emit({
            "cases": total,
            "failures": [t.as_dict() for t in failures],
            "holds": not failures,
        })
    else:
        for t in failures:
            print(f"{t}: Frisch identity violated")
        if failures:
            print(f"{len(failures)} of {total} cases violated")
        else:
            print(f"all {total} case{'' if total == 1 else 's'} hold")
    return REFUTED if failures else OK


def cmd_integral(args) -> int:
    t = ParamTriple(args.n, args.b, args.c)
    true_sum = definitional_sum(t)
    if not args.truncated:
        integral = integral_representation(t)
        ok = integral == true_sum
        if args.json:
            _emit({**t.as_dict(), "integral": integral.to_json(),
                   "sum": true_sum.to_json(), "match": ok})
        else:
            print(f"Integral: {integral}")
            print(f"Sum: {true_sum}")
            print(f"Match: {_match(ok)}")
        return OK if ok else REFUTED

    truncated = truncated_first_term_integral(t)
    claimed = claimed_closed_form(t)
    vs_sum = truncated == true_sum
    vs_claimed = truncated == claimed
    if args.json:
        _emit({**t.as_dict(), "truncated": truncated.to_json(),
               "sum": true_sum.to_json(), "claimed": claimed.to_json(),
               "matches_sum": vs_sum, "matches_claimed": vs_claimed})
    else:
        print(f"Truncated: {truncated}")
        print(f"True sum: {true_sum}")
        print(f"Claimed: {claimed}")
        print(f"Matches true sum: {_match(vs_sum)}")
        print(f"Matches claimed form: {_match(vs_claimed)}")
    return OK if vs_sum else REFUTED


def _read_identity_file(path: str) -> str:
    p = Path(path)
    if p.exists():
        return p.read_text(encoding="utf-8")
    # bare names of bundled files resolve from any working directory
    if p.name == path:
        bundled = shipped_path(path)
        if bundled is not None:
            return bundled.read_text(encoding="utf-8")
    raise FileNotFoundError(f"no such file: {path}")


def cmd_run(args) -> int:
    try:
        source = _read_identity_file(args.path)
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror or exc}") from None
    specs = parse_identity_file(source)
    results = [(spec, run_spec(spec)) for spec in specs]
    any_failed = any(not r.equal for _, reports in results for r in reports)

    if args.json:
        _emit([
            {"identity": spec.name, "reports": [r.as_dict() for r in reports]}
            for spec, reports in results
        ])
    else:
        for spec, reports in results:
            for r in reports:
                where = ", ".join(f"{k}={v}" for k, v in r.params.items())
                line = f"{spec.name} [{where}]: Match: {_match(r.equal)}"
                if not r.equal:
                    line += f"; Difference: {r.difference}"
                print(line)
            failed = sum(not r.equal for r in reports)
            print(f"{spec.name}: {len(reports) - failed} of {len(reports)} bindings hold, {failed} fail")
    return REFUTED if any_failed else OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hypverify",
        description="Exact verification of parametric binomial-sum identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def triple(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--c", type=int, required=True)

    def grid(p):
        p.add_argument("--n-max", type=int, required=True)
        p.add_argument("--b-max", type=int, required=True)

    def json_flag(p):
        p.add_argument("--json", action="store_true", help="emit one JSON document")

    p = sub.add_parser("check", help="compare the sum with the claimed closed form at one (n, b, c)")
    triple(p)
    json_flag(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="list every (n, b, c) in a grid where the closed form fails")
    grid(p)
    json_flag(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("frisch", help="sweep Frisch's identity over a grid")
    grid(p)
    json_flag(p)
    p.set_defaults(func=cmd_frisch)

    p = sub.add_parser("integral", help="audit the Beta-integral representation")
    triple(p)
    p.add_argument("--truncated", action="store_true",
                   help="integrate only the first bracket term")
    json_flag(p)
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("run", help="run every identity in a .hvd file")
    p.add_argument("path")
    json_flag(p)
    p.set_defaults(func=cmd_run)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, DslError) as exc:
        print(f"hypverify {args.command}: error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
