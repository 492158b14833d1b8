"""Command line: convert, matrix, verify, realize, walls, pair.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from dataclasses import dataclass

from .checks import SUITES, run_suite
from .compositions import format_composition, parse_composition
from .graded import ParseError, fmt_rational
from .nsym import NSymElem
from .qsym import QSymElem, pair

SPACES = {"nsym": NSymElem, "qsym": QSymElem}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    max_degree: int = 8
    m: int = None
    format: str = "pretty"

    def __post_init__(self):
        if self.max_degree < 1:
            raise UsageError("max degree must be at least 1")
        if self.m is not None and self.m < 1:
            raise UsageError("--m must be at least 1")


def _config(args) -> CliConfig:
    raw = os.environ.get("NSYMKIT_MAX_DEGREE")
    try:
        cap = int(raw) if raw else CliConfig.max_degree
    except ValueError:
        raise UsageError(f"NSYMKIT_MAX_DEGREE must be an integer, got {raw!r}") from None
    return CliConfig(cap, getattr(args, "m", None), getattr(args, "format", "pretty"))


def _check_degree(n, cfg):
    if n > cfg.max_degree:
        raise UsageError(f"degree {n} exceeds the cap {cfg.max_degree} (set NSYMKIT_MAX_DEGREE to raise it)")


def _parse(space, text):
    try:
        cls = SPACES[space]
    except KeyError:
        raise UsageError(f"unknown space {space!r}; use nsym or qsym") from None
    return cls.parse(text)


def _csv(rows):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit_element(x, fmt):
    if fmt == "json":
        return json.dumps(x.to_json(), indent=2)
    if fmt == "csv":
        return _csv([["index", "coeff"]] + [[format_composition(a), fmt_rational(c)] for a, c in x.items()])
    return str(x)


# -- commands -------------------------------------------------------------------------------

def cmd_convert(args, cfg):
    x = _parse(args.space, args.expr)
    _check_degree(x.degree, cfg)
    try:
        y = x.to(args.to)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _emit_element(y, cfg.format), 0


def cmd_matrix(args, cfg):
    from .transmat import MatrixConfig, cob_matrix, named_matrix

    mcfg = MatrixConfig(cfg.max_degree)
    if args.space == "named":
        if len(args.spec) != 2:
            raise UsageError("usage: matrix named NAME N")
        name, n = args.spec[0], args.spec[1]
    else:
        if len(args.spec) != 3:
            raise UsageError(f"usage: matrix {args.space} FROM TO N")
        frm, to, n = args.spec
    try:
        n = int(n)
    except ValueError:
        raise UsageError(f"degree must be an integer, got {n!r}") from None
    _check_degree(n, cfg)
    try:
        if args.space == "named":
            tm = named_matrix(name, n, mcfg)
        else:
            tm = cob_matrix(args.space, frm, to, n, mcfg)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc).strip("'\"")) from None
    fmt = "csv" if args.csv else "json" if args.json else cfg.format
    if fmt == "csv":
        return tm.to_csv().rstrip("\n"), 0
    if fmt == "json":
        return json.dumps(tm.to_json(), indent=2), 0
    return tm.pretty(), 0


def cmd_verify(args, cfg):
    n = args.n if args.n is not None else 6
    if n < 1:
        raise UsageError("--n must be at least 1")
    suites = SUITES if args.suite == "all" else (args.suite,)
    results = [run_suite(s, n, cfg.m) for s in suites]
    ok = all(r.passed for r in results)
    if cfg.format == "json":
        text = json.dumps({"passed": ok, "suites": [r.to_json() for r in results]}, indent=2)
    elif cfg.format == "csv":
        rows = [["suite", "n", "status", "check", "passed", "detail"]]
        for r in results:
            rows += [[r.suite, r.n, l.status, l.name, "PASS" if l.passed else "FAIL", l.detail] for l in r.lines]
        text = _csv(rows)
    else:
        out = []
        for r in results:
            out.append(f"== {r.suite} (n <= {r.n}): {'PASS' if r.passed else 'FAIL'}")
            out.extend("  " + l.render() for l in r.lines)
        out.append(f"overall: {'PASS' if ok else 'FAIL'}")
        text = "\n".join(out)
    return text, 0 if ok else 1


_GEN = re.compile(r"^\s*(ribbon|r|h|e|psi|phi)\s+([\d,\[\]\s]+)$")


def cmd_realize(args, cfg):
    from .polyreal import DEFAULT_CAP, RealizationError, nc_linear, realize_basis, realize_nc

    cap = max(DEFAULT_CAP, cfg.max_degree)
    m_gen = _GEN.match(args.gen)
    try:
        if m_gen:
            kind, arg = m_gen.groups()
            kind = "ribbon" if kind == "r" else kind
            arg = parse_composition(arg) if kind == "ribbon" else int(arg)
            n = sum(arg) if kind == "ribbon" else arg
            _check_degree(n, cfg)
            p = realize_nc((kind, arg), cfg.m or max(n, 1), cap)
        else:
            x = _parse("nsym", args.gen)
            _check_degree(x.degree, cfg)
            m = cfg.m or max(x.degree, 1)
            p = nc_linear([(c, realize_basis(x.basis, a, m, cap)) for a, c in x.items()], m, cap)
    except RealizationError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.format == "json":
        return json.dumps(p.to_json(), indent=2), 0
    if cfg.format == "csv":
        return _csv([["word", "coeff"]] + [["".join(map(str, w)), fmt_rational(c)]
                                          for w, c in p.sorted_terms()]), 0
    return str(p), 0


def _comp(text):
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise UsageError(f"bad composition {text!r}: {exc}") from None


def cmd_walls(args, cfg):
    from .walls import (WALL_STATS, WallError, brick_tabloids, enumerate_indexed_walls, enumerate_walls, make_wall,
                        ordered_count, wall_stat, weight)

    if args.lam or args.mu:
        if not (args.lam and args.mu):
            raise UsageError("tabloids need both --lam and --mu")
        lam, mu = _comp(args.lam), _comp(args.mu)
        try:
            tabs = brick_tabloids(lam, mu)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        summary = {"count": len(tabs), "weight": weight(tabs), "ordered": ordered_count(lam, mu)}
        if cfg.format == "json":
            return json.dumps({"shape": list(lam), "type": list(mu), **summary,
                               "tabloids": [[list(r) for r in t.rows] for t in tabs]}, indent=2), 0
        blocks = [t.render() for t in tabs]
        head = f"count={summary['count']} weight={summary['weight']} ordered={summary['ordered']}"
        return "\n\n".join(blocks + [head]), 0

    try:
        if args.shape and args.type:
            walls = [make_wall(_comp(args.shape), _comp(args.type))]
        elif args.shape:
            walls = enumerate_walls(of_shape=_comp(args.shape))
        elif args.type:
            walls = enumerate_walls(of_type=_comp(args.type))
        else:
            raise UsageError("give --shape and/or --type, or --lam and --mu")
    except WallError as exc:
        raise UsageError(str(exc)) from None

    if cfg.format == "json":
        return json.dumps([w.to_json() for w in walls], indent=2), 0
    out = []
    for w in walls:
        block = [f"shape {format_composition(w.shape)} type {format_composition(w.type)}"]
        if args.indexed:
            block += [iw.render() + "\n" for iw in enumerate_indexed_walls(w.shape, w.type)]
        else:
            block.append(w.render())
        if args.stats:
            block.append(" ".join(f"{k}={fmt_rational(wall_stat(w, k))}" for k in WALL_STATS))
        out.append("\n".join(block).rstrip("\n"))
    return "\n\n".join(out), 0


def cmd_pair(args, cfg):
    q = _parse("qsym", args.qexpr)
    x = _parse("nsym", args.nexpr)
    value = pair(q, x)
    if cfg.format == "json":
        return json.dumps({"pairing": fmt_rational(value)}), 0
    return fmt_rational(value), 0


# -- parser ------------------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("pretty", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--n", type=int, default=argparse.SUPPRESS, help="maximum degree for verify")
    common.add_argument("--m", type=int, default=argparse.SUPPRESS, help="number of variables")

    parser = argparse.ArgumentParser(prog="nsymkit", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common], help="change the basis of an element")
    p.add_argument("space", choices=sorted(SPACES))
    p.add_argument("expr")
    p.add_argument("--to", required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("matrix", parents=[common], help="transition or named matrix")
    p.add_argument("space", choices=("nsym", "qsym", "named"))
    p.add_argument("spec", nargs="+", help="FROM TO N, or NAME N for named matrices")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", choices=("all",) + SUITES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("realize", parents=[common], help="expand in noncommuting variables")
    p.add_argument("gen", help='generator like "psi 3" or "ribbon 2,1", or an expression like "h[2,1]"')
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("walls", parents=[common], help="walls and brick tabloids")
    p.add_argument("--shape")
    p.add_argument("--type")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--indexed", action="store_true")
    p.add_argument("--lam", help="brick tabloid shape")
    p.add_argument("--mu", help="brick tabloid type")
    p.set_defaults(func=cmd_walls)

    p = sub.add_parser("pair", parents=[common], help="pair a QSym element with an NSym element")
    p.add_argument("qexpr")
    p.add_argument("nexpr")
    p.set_defaults(func=cmd_pair)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for attr, default in (("format", "pretty"), ("n", None), ("m", None)):
        if not hasattr(args, attr):
            setattr(args, attr, default)
    try:
        cfg = _config(args)
        text, code = args.func(args, cfg)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
