"""
Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 verification failure or
oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import equivariant as eq
from . import flags as fl
from . import schemas
from . import torus as tg
from .combinatorics import HessenbergFunction, Permutation, Transposition
from .errors import HessmgError, NotAFlag
from .linalg import load_matrix, random_rational
from .verify import run_verification

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    n: int | None
    h: HessenbergFunction | None
    operator: str
    seed: int
    samples: int
    format: str
    output: str | None
    verbose: bool


def _config(args, default_format: str) -> RunConfig:
    h = None
    if args.h is not None:
        h = HessenbergFunction.parse(args.h)
    n = args.n
    if n is None and h is not None:
        n = h.n
    if h is not None and n != h.n:
        raise UsageError(f"--n {n} does not match --h {args.h} ({h.n} values)")
    if n is not None and n < 1:
        raise UsageError("--n must be positive")
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    return RunConfig(n, h, args.operator, args.seed, args.samples,
                     args.format or default_format, args.output, args.verbose)


def _need_h(cfg: RunConfig) -> HessenbergFunction:
    if cfg.h is None:
        raise UsageError("--h is required for this command")
    return cfg.h


def _emit(cfg: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(cfg: RunConfig, doc, schema: str) -> None:
    schemas.validate(doc, schema)
    _emit(cfg, json.dumps(doc, indent=2))


def _classification_kind(cfg: RunConfig, n: int) -> tuple[str, fl.LinearOperator | None]:
    op = cfg.operator
    if op == "full":
        return tg.FULL, None
    X = fl.parse_operator(op, n)
    if X.kind == fl.NILPOTENT:
        return tg.NILPOTENT, X
    if X.kind == fl.DIAGONAL:
        if X.size != n:
            raise UsageError(f"{op} has {X.size} eigenvalues, expected {n}")
        if not X.distinct:
            print("warning: repeated eigenvalues; the orbit criterion assumes distinct ones",
                  file=sys.stderr)
        return tg.SEMISIMPLE, X
    raise UsageError("classification needs --operator nilpotent, diag:... or full")


def cmd_fixed_points(cfg: RunConfig, args) -> int:
    h = _need_h(cfg)
    kind, _ = _classification_kind(cfg, h.n)
    if kind == tg.NILPOTENT:
        points = [w for w in tg.semisimple_fixed_points(h.n, h) if tg.nilpotent_fixed_point(w, h)]
    else:
        points = tg.semisimple_fixed_points(h.n, h)
    if cfg.format == "json":
        doc = {"n": h.n, "h": str(h), "operator": cfg.operator,
               "fixed_points": [str(w) for w in points]}
        if cfg.verbose and kind == tg.NILPOTENT:
            doc["trace"] = {str(w): [list(row) for row in tg.fixed_point_trace(w, h)]
                            for w in tg.semisimple_fixed_points(h.n, h)}
        _emit_json(cfg, doc, "fixed-points")
        return EXIT_OK
    lines = []
    if cfg.verbose and kind == tg.NILPOTENT:
        for w in tg.semisimple_fixed_points(h.n, h):
            trace = tg.fixed_point_trace(w, h)
            verdict = "fixed" if all(r[3] for r in trace) else "not fixed"
            lines.append(f"# {w}: {verdict}")
            for i, lhs, rhs, ok in trace:
                lines.append(f"#   w^-1({i}) = {lhs} {'<=' if ok else '>'} "
                             f"h(w^-1({i + 1})) = {rhs}")
    elif cfg.verbose:
        lines.append("# every permutation flag is fixed for a diagonal operator")
    lines += [str(w) for w in points]
    _emit(cfg, "\n".join(lines))
    return EXIT_OK


def cmd_moment_graph(cfg: RunConfig, args) -> int:
    h = _need_h(cfg)
    kind, _ = _classification_kind(cfg, h.n)
    graph = tg.moment_graph(h.n, h, kind, include_rejected=args.include_rejected)
    if cfg.format == "dot":
        _emit(cfg, graph.to_dot())
    elif cfg.format == "json":
        _emit_json(cfg, graph.to_json(), "moment-graph")
    else:
        lines = [f"vertices ({len(graph.vertices)}): " + " ".join(map(str, graph.vertices))]
        for e in graph.edges:
            mark = "" if e.closure_contained else "  (not contained)"
            lines.append(f"{e.w} -- {e.other}  {e.label}{mark}")
        _emit(cfg, "\n".join(lines))
    return EXIT_OK


def _membership_flag(cfg: RunConfig, args, n: int):
    if args.matrix:
        return fl.FlagMatrix(load_matrix(args.matrix))
    if not args.w:
        raise UsageError("membership needs --matrix FILE or --w PERM")
    w = Permutation.parse(args.w)
    if w.n != n:
        raise UsageError(f"--w has {w.n} entries, expected {n}")
    if not args.s:
        return fl.permutation_flag(w)
    s = Transposition.parse(args.s)
    if args.c is not None:
        c = args.c
    else:
        c = random_rational(random.Random(cfg.seed), nonzero=True)
    return fl.one_parameter_flag(s.j, s.k, c, w)


def cmd_membership(cfg: RunConfig, args) -> int:
    h = _need_h(cfg)
    X = fl.parse_operator(cfg.operator, h.n)
    g = _membership_flag(cfg, args, h.n)
    verdicts = fl.all_verdicts(g, X, h)
    agree = len(set(verdicts.values())) == 1
    member = verdicts["rank"] if agree else None
    if cfg.format == "json":
        _emit_json(cfg, {"n": h.n, "h": str(h), "operator": str(X), "flag": g.matrix.to_json(),
                         "verdicts": verdicts, "agree": agree, "member": member},
                   "membership")
    else:
        lines = [f"{name:12s} {'member' if v else 'non-member'}" for name, v in verdicts.items()]
        if agree:
            lines.append(f"verdict: {'member' if member else 'non-member'} "
                         f"({len(verdicts)}/{len(verdicts)} agree)")
        else:
            lines.append("ORACLE DISAGREEMENT")
            lines.append("flag:\n" + str(g.matrix))
            lines.append(f"h = {h}, operator = {X}")
        _emit(cfg, "\n".join(lines))
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(cfg: RunConfig, args) -> int:
    max_n = args.max_n if args.max_n is not None else (cfg.n or 3)
    report = run_verification(max_n=max_n, seed=cfg.seed, samples=cfg.samples,
                              all_h=args.all_h, timings=args.timings)
    if cfg.format == "json":
        _emit_json(cfg, report, "verify")
    else:
        lines = []
        for c in report["checks"]:
            status = "PASS" if c["failure_count"] == 0 else "FAIL"
            lines.append(f"{status} {c['name']}: {c['cases_run']} cases, "
                         f"{c['failure_count']} failures")
            for f in c["failures"][:3]:
                lines.append(f"     {json.dumps(f)}")
        for c in report["diagnostics"]:
            lines.append(f"INFO {c['name']}: {c['cases_run']} cases, "
                         f"{c['failure_count']} mismatches")
        lines.append("all checks passed" if report["passed"] else "verification FAILED")
        _emit(cfg, "\n".join(lines))
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_ideal(cfg: RunConfig, args) -> int:
    if args.kind == "gtilde":
        h = _need_h(cfg)
        n, gens, symbol = h.n, eq.gtilde_generators(h), "g~"
    else:
        if cfg.n is None:
            raise UsageError("--n (or --h) is required")
        n = cfg.n
        gens = eq.g_generators(n) if args.kind == "g" else eq.symmetric_ideal_generators(n)
        symbol = "g" if args.kind == "g" else "e"
    if cfg.format == "json":
        _emit_json(cfg, {"kind": args.kind, "n": n,
                         "h": str(cfg.h) if cfg.h else None,
                         "generators": [g.to_json() for g in gens]}, "ideal")
        return EXIT_OK
    lines = []
    for g in gens:
        lines.append(f"{symbol}{g.index} = {g.factored_text()}")
        lines.append(f"{' ' * (len(symbol) + len(str(g.index)))} = {g.expanded}")
    _emit(cfg, "\n".join(lines))
    return EXIT_OK


def cmd_localize(cfg: RunConfig, args) -> int:
    h = _need_h(cfg)
    if not args.w:
        raise UsageError("--w is required")
    w = Permutation.parse(args.w)
    if w.n != h.n:
        raise UsageError(f"--w has {w.n} entries, expected {h.n}")
    fixed = tg.nilpotent_fixed_point(w, h)
    locs = [eq.localization_factors(w, h, args.mode if fixed else eq.INSKO, coeff)
            for coeff in eq.COEFFS]
    if cfg.format == "json":
        _emit_json(cfg, [loc.to_json() for loc in locs], "localize")
        return EXIT_OK
    if not fixed:
        _emit(cfg, "0 (not a fixed point)")
        return EXIT_OK
    lines = [f"w = {w}, h = {h}, mode = {args.mode}",
             "pairs (i,j): " + (" ".join(f"({i},{j})" for i, j in locs[0].pairs) or "none")]
    for loc in locs:
        factors = " * ".join(f"({f})" for _, _, f in loc.factors) or "(empty)"
        lines.append(f"{loc.coeff}: {factors}")
        lines.append(f"{loc.coeff} product: {loc.product}")
    _emit(cfg, "\n".join(lines))
    return EXIT_OK


def cmd_relation_report(cfg: RunConfig, args) -> int:
    h = _need_h(cfg)
    rows = eq.relation_report(h)
    if cfg.format == "json":
        _emit_json(cfg, rows, "relation-report")
    else:
        _emit(cfg, "\n".join(
            f"w={r['w']} i={r['generator_index']}: g_i={r['lhs']}  t*g~_i={r['rhs']}  "
            f"{'match' if r['match'] else 'MISMATCH'}" for r in rows))
    return EXIT_OK


def cmd_line_check(cfg: RunConfig, args) -> int:
    h = _need_h(cfg)
    report = eq.line_vanishing_check(h)
    if cfg.format == "json":
        _emit_json(cfg, report, "line-check")
    else:
        _emit(cfg, "\n".join([
            f"lines x = w t inside V(E_n + I_h): {' '.join(report['vanishing_set'])}",
            f"zeros of the gtilde ideal:         {' '.join(report['ideal_fixed_points'])}",
            f"sets equal: {report['sets_equal']}"]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--h", help='Hessenberg function, e.g. "2,3,3"')
    common.add_argument("--operator", default="nilpotent",
                        help='"nilpotent", "diag:1,2,3", "matrix:<file.json>" or "full"')
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=3)
    common.add_argument("--format", choices=["json", "dot", "text"])
    common.add_argument("--output")
    common.add_argument("--verbose", action="store_true")

    parser = _Parser(prog="hessmg",
                     description="Fixed points, moment graphs and ideals of Hessenberg varieties.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, default_format, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn, default_format=default_format)
        return p

    add("fixed-points", cmd_fixed_points, "text", "list torus-fixed points")
    p = add("moment-graph", cmd_moment_graph, "json", "export the moment graph")
    p.add_argument("--include-rejected", action="store_true",
                   help="also list full-flag edges whose closure is not contained")
    p = add("membership", cmd_membership, "text", "run the four membership oracles")
    p.add_argument("--matrix", help="flag matrix JSON file")
    p.add_argument("--w", help="permutation flag [w]")
    p.add_argument("--s", help='transposition "s(j,k)" for the flag G_jk(c) w')
    p.add_argument("--c", help="orbit parameter (default: drawn from --seed)")
    p = add("verify", cmd_verify, "json", "run the verification harness")
    p.add_argument("--max-n", type=int)
    p.add_argument("--all-h", action="store_true",
                   help="every Hessenberg function instead of the three standard ones")
    p.add_argument("--timings", action="store_true",
                   help="include elapsed seconds per check (breaks byte-identity)")
    p = add("ideal", cmd_ideal, "text", "print ideal generators")
    p.add_argument("--kind", choices=["gtilde", "g", "en"], default="gtilde")
    p = add("localize", cmd_localize, "text", "localization factors at [w]")
    p.add_argument("--w")
    p.add_argument("--mode", choices=list(eq.MODES), default=eq.INSKO)
    add("relation-report", cmd_relation_report, "json", "compare g_i and t*g~_i on lines")
    add("line-check", cmd_line_check, "json", "which lines x = w t the ideal vanishes on")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args, args.default_format)
        if cfg.format == "dot" and args.command != "moment-graph":
            raise UsageError("--format dot is only available for moment-graph")
        return args.fn(cfg, args)
    except NotAFlag as exc:
        print(f"hessmg: not a flag: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, HessmgError, OSError, json.JSONDecodeError) as exc:
        print(f"hessmg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
