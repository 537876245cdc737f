"""Command-line entry point: ``dicolor <command> ...``.

Every command prints its result (JSON unless noted) to stdout and, with
``--json PATH``, also writes a full run report there. Exit codes: 0 success,
1 negative verdict, 2 input error, 3 size-limit refusal.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds as B
from . import lmatrix as L
from .dichromatic import chi_d_exact, chi_d_ordering_oracle, is_valid_coloring
from .digraph import all_digraphs, random_dag, random_digraph, sample_digraphs, underlying_graph
from .errors import DigraphError, InvalidMatrixError, NotApplicableError, ParseError, SizeLimitError
from .figures import run_figures_suite
from .io import (
    RunReport,
    canonical_json,
    digest,
    export_dot,
    parse_colors,
    parse_edge_list,
    parse_vertex_names,
    serialize_edge_list,
    vertex_names,
)
from .partitions import (
    achromatic_number,
    chain_check,
    grundy_number,
    interpolation_check,
    psi_sd,
)
from .sequences import s_number

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


# A command returning a third element finishes with exit code 1 after printing.
NEGATIVE = "negative-verdict"


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load(args):
    if not args.input:
        raise DigraphError("--input is required")
    text = _read(args.input)
    return parse_edge_list(text), text


def _limit(args, default):
    return args.limit if args.limit is not None else default


def _names(partition):
    return [vertex_names(cls) for cls in partition]


# -- commands ----------------------------------------------------------------

def cmd_chid(args):
    if args.check_iff_claim:
        p = args.p if args.p is not None else 3
        if p > 4:
            raise SizeLimitError("chid --check-iff-claim", p, 4)
        res = B.check_iff_claim(all_digraphs(p))
        res["p"] = p
        return res, None
    ld, text = _load(args)
    D = ld.digraph
    k, partition = chi_d_exact(D, limit=_limit(args, 20))
    res = {"chi_d": k, "partition": _names(partition), "oracle_checked": False}
    if args.oracle:
        oracle = chi_d_ordering_oracle(D)
        res["oracle_checked"] = True
        res["oracle_chi_d"] = oracle
        if oracle != k:
            res["oracle_agrees"] = False
            return res, text, NEGATIVE
        res["oracle_agrees"] = True
    return res, text


def cmd_validate(args):
    ld, text = _load(args)
    if not args.colors:
        raise DigraphError("--colors is required")
    colors = parse_colors(_read(args.colors), ld.p)
    ok, witness = is_valid_coloring(ld.digraph, colors)
    if ok:
        return {"valid": True, "realizing_order": vertex_names(witness)}, text
    return {"valid": False, "cycle": vertex_names(witness)}, text, NEGATIVE


def cmd_scolor(args):
    ld, text = _load(args)
    order = parse_vertex_names(args.order, ld.p) if args.order else list(range(ld.p))
    k, seq = s_number(ld.digraph, order, args.mode)
    return {"mode": args.mode, "colors": k, "sequence": seq.to_json()}, text


def cmd_bounds(args):
    ld, text = _load(args)
    D = ld.digraph
    report = B.sandwich_check(D, limit=_limit(args, 20))
    res = report.to_json()
    if report.bound_indegree is None:
        try:
            B.bound_indegree(D)
        except NotApplicableError as exc:
            res["bound_indegree_refusal"] = str(exc)
    odd, cycle = B.has_odd_symmetric_cycle(D)
    res["odd_symmetric_cycle"] = vertex_names(cycle) if odd else None
    res["c_bipartite"] = report.chi_d <= 2
    return res, text


def cmd_partitions(args):
    ld, text = _load(args)
    D = ld.digraph
    G = underlying_graph(D)
    what = args.what
    if what == "psi":
        k, part = achromatic_number(G, limit=_limit(args, 10))
        res = {"psi": k, "partition": _names(part)}
    elif what == "psisd":
        k, part = psi_sd(D, limit=_limit(args, 10))
        res = {"psi_sd": k, "partition": _names(part)}
    elif what == "grundy":
        k, order = grundy_number(G, limit=_limit(args, 9))
        res = {"grundy": k, "order": vertex_names(order)}
    elif what == "interpolate":
        report = interpolation_check(G, limit=_limit(args, 8))
        res = report.to_json()
        if not report.holds:
            return res, text, NEGATIVE
    else:
        res = chain_check(D, limit=_limit(args, 8)).to_json()
    res["what"] = what
    return res, text


def cmd_lmatrix(args):
    if args.action == "encode":
        ld, text = _load(args)
        M = L.encode(ld)
        return (L.pretty(M) if args.pretty else L.to_csv(M)), text
    if not args.matrix:
        raise DigraphError("--matrix is required")
    text = _read(args.matrix)
    M = L.from_csv(text)
    if args.action == "decode":
        return serialize_edge_list(L.decode(M)), text
    if args.action == "validate":
        ok, violations = L.validate(M)
        res = {
            "valid": ok,
            "violations": [
                {"condition": c, "i": f"v{i + 1}", "j": f"v{j + 1}", "k": f"v{k + 1}"} for c, i, j, k in violations
            ],
        }
        return (res, text) if ok else (res, text, NEGATIVE)
    check = L.acyclic_color_matrix_semantic(M)
    return check.to_json(), text


def cmd_ensemble(args):
    if args.seed is None:
        raise DigraphError("--seed is required for randomized commands")
    instances = list(sample_digraphs(args.count, args.p, args.p, args.seed))
    rows = []
    if args.check == "sandwich":
        for i, D in enumerate(instances):
            r = B.sandwich_check(D)
            rows.append({"id": i, "arcs": len(D.arcs), "chi_d": r.chi_d, "beta_oc": r.beta_oc,
                         "violations": r.violations})
        failed = sum(bool(r["violations"]) for r in rows)
        summary = {"instances": len(rows), "with_violations": failed}
    elif args.check == "prop8":
        for i, D in enumerate(instances):
            odd = B.has_odd_symmetric_cycle(D)[0]
            bip = B.is_c_bipartite(D)
            rows.append({"id": i, "c_bipartite": bip, "odd_symmetric_cycle": odd, "agree": bip != odd})
        summary = {"instances": len(rows), "disagreements": sum(not r["agree"] for r in rows)}
    else:
        tally: dict[str, int] = {}
        for i, D in enumerate(instances):
            report = chain_check(D)
            rows.append({"id": i, "values": report.values, "failed": report.failed})
            for name in report.failed:
                tally[name] = tally.get(name, 0) + 1
        summary = {"instances": len(rows), "failures_by_link": tally}
    return {"check": args.check, "summary": summary, "instances": rows}, None


def cmd_figures(args):
    report = run_figures_suite()
    if report.results["summary"]["mismatch"]:
        return report.results, None, NEGATIVE
    return report.results, None


def cmd_gen(args):
    if args.seed is None:
        raise DigraphError("--seed is required for randomized commands")
    if args.dag:
        D = random_dag(args.p, args.prob, seed=args.seed)
    else:
        D = random_digraph(args.p, args.prob, allow_digons=not args.no_digons, seed=args.seed)
    return (export_dot(D) if args.dot else serialize_edge_list(D)), None


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="edge-list file")
    common.add_argument("--json", help="also write the canonical run report to this path")
    common.add_argument("--seed", type=int, help="seed for randomized commands")
    common.add_argument("--limit", type=int, help="override the exact-search size limit")

    parser = argparse.ArgumentParser(prog="dicolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chid", parents=[common], help="exact dichromatic number")
    p.add_argument("--oracle", action="store_true", help="cross-check against the ordering oracle")
    p.add_argument("--check-iff-claim", action="store_true",
                   help="search all digraphs on --p vertices for chi_d == chi(G(D)) with an asymmetric arc")
    p.add_argument("--p", type=int)
    p.set_defaults(func=cmd_chid)

    p = sub.add_parser("validate", parents=[common], help="check a coloring, report a realizing order")
    p.add_argument("--colors", help="file of '<v> <color>' lines")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("scolor", parents=[common], help="s-number along a vertex order")
    p.add_argument("--order", help="comma-separated vertex names, e.g. v1,v3,v2")
    p.add_argument("--mode", choices=("greedy", "exact"), default="greedy")
    p.set_defaults(func=cmd_scolor)

    p = sub.add_parser("bounds", parents=[common], help="all bounds on chi_d")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("partitions", parents=[common], help="complete-partition numbers")
    p.add_argument("--what", choices=("psi", "psisd", "grundy", "interpolate", "chain"), required=True)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("lmatrix", parents=[common], help="L-matrix encode/decode/validate")
    p.add_argument("action", choices=("encode", "decode", "validate", "acyclic-check"))
    p.add_argument("--matrix", help="matrix CSV file")
    p.add_argument("--pretty", action="store_true", help="aligned table instead of CSV")
    p.set_defaults(func=cmd_lmatrix)

    p = sub.add_parser("ensemble", parents=[common], help="seeded random ensemble checks")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--check", choices=("sandwich", "prop8", "chain"), required=True)
    p.set_defaults(func=cmd_ensemble)

    p = sub.add_parser("figures", parents=[common], help="recompute every worked example")
    p.set_defaults(func=cmd_figures)

    p = sub.add_parser("gen", parents=[common], help="seeded random digraph")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--prob", type=float, default=0.3)
    p.add_argument("--no-digons", action="store_true")
    p.add_argument("--dag", action="store_true")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of edge-list")
    p.set_defaults(func=cmd_gen)
    return parser


def _parameters(args) -> dict:
    skip = {"func", "command", "json", "input"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v not in (None, False)}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (DigraphError, ParseError, InvalidMatrixError, NotApplicableError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    result, text = out[0], out[1]
    code = EXIT_FALSE if len(out) > 2 else EXIT_OK
    sys.stdout.write(result if isinstance(result, str) else canonical_json(result))
    if args.json:
        report = RunReport(args.command, digest(text) if text is not None else None, _parameters(args), result)
        Path(args.json).write_text(report.to_json(), encoding="utf-8")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
