"""Command-line front end.

Exit codes: 0 success, 1 resource limit hit, 2 parse or usage error,
3 selftest inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from .count import EnumerationBudgetError, count_fin, enumerate_fin
from .decide import decide_finhab, decide_inhab
from .oracle import OracleExplosion, enumerate_inhabitants
from .selfcheck import selfcheck
from .semantics import expand_solution
from .spacegen import SpaceGenError, build_space
from .syntax import DuplicateVariableError, ParseError, parse_sequent

EXIT_OK = 0
EXIT_LIMIT = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a JSON object instead of text")

    parser = argparse.ArgumentParser(prog="inhabit", description="Inhabitation in simply-typed lambda-calculus.")
    parser.add_argument("--json", action="store_true", help="print a JSON object instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[common])
        p.add_argument("sequent", help='sequent such as "x:p, f:p->q |- q"')
        return p

    cmd("inhab", "decide whether the sequent has an inhabitant")
    cmd("finhab", "decide whether it has finitely many")
    cmd("count", "number of inhabitants, or 'infinite'")
    p = cmd("enum", "list all inhabitants (finite case)")
    p.add_argument("--oracle-depth", type=int, metavar="N",
                   help="list inhabitants of depth <= N by brute force instead")
    cmd("space", "print the finitary search space")
    p = cmd("expand", "print the solution space truncated at a depth")
    p.add_argument("--depth", type=int, required=True)
    p = cmd("oracle", "brute-force enumeration up to a depth")
    p.add_argument("--depth", type=int, required=True)
    p = cmd("selftest", "run consistency checks on the sequent")
    p.add_argument("--depth", type=int, default=4)
    return parser


def _run(args) -> tuple[object, str, dict, int]:
    """Returns (result, text output, details, exit code)."""
    seq = args.seq
    cmd = args.command
    if cmd == "inhab":
        ok = decide_inhab(seq)
        return ("inhabited" if ok else "uninhabited"), "", {"inhabited": ok}, EXIT_OK
    if cmd == "finhab":
        ok = decide_finhab(seq)
        return ("finite" if ok else "infinite"), "", {"finite": ok}, EXIT_OK
    if cmd == "count":
        if not decide_finhab(seq):
            return "infinite", "", {"finite": False}, EXIT_OK
        return count_fin(build_space(seq)), "", {"finite": True}, EXIT_OK
    if cmd == "enum":
        if args.oracle_depth is not None:
            terms = enumerate_inhabitants(seq, args.oracle_depth)
            return [t.text for t in terms], "", {"source": "oracle", "depth": args.oracle_depth}, EXIT_OK
        if not decide_finhab(seq):
            raise UsageError("infinitely many inhabitants; use --oracle-depth N for a bounded listing")
        terms = enumerate_fin(build_space(seq))
        return [t.text for t in terms], "", {"source": "space", "count": len(terms)}, EXIT_OK
    if cmd == "space":
        return build_space(seq).text, "", {}, EXIT_OK
    if cmd in ("expand", "oracle"):
        if args.depth < 0:
            raise UsageError("--depth must be non-negative")
        if cmd == "expand":
            return expand_solution(seq, args.depth).text, "", {"depth": args.depth}, EXIT_OK
        terms = enumerate_inhabitants(seq, args.depth)
        return [t.text for t in terms], "", {"depth": args.depth}, EXIT_OK
    if cmd == "selftest":
        checks = selfcheck(seq, args.depth)
        ok = all(c.ok for c in checks)
        lines = "\n".join(
            f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f"  [{c.detail}]" if c.detail else "") for c in checks
        )
        details = {"checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]}
        return ("pass" if ok else "fail"), lines, details, (EXIT_OK if ok else EXIT_INCONSISTENT)
    raise UsageError(f"unknown command {cmd}")


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        args.seq = parse_sequent(args.sequent)
        result, text, details, code = _run(args)
    except (ParseError, DuplicateVariableError, UsageError) as exc:
        print(f"inhabit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SpaceGenError, OracleExplosion, EnumerationBudgetError) as exc:
        print(f"inhabit: limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT

    if args.json:
        out = {"sequent": args.seq.text, "command": args.command, "result": result, "details": details}
        print(json.dumps(out))
    elif isinstance(result, list):
        for line in result:
            print(line)
    else:
        if text:
            print(text)
        print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
