"""Command-line surface: one verb per pipeline operation.

Documents are read from a file argument or stdin ("-") and results go
to stdout, so commands compose with pipes.  Exit codes: 0 on success,
1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import load_example
from .analysis import (check_algebraic_cut, global_dimension,
                       jacobian_dimension, basis_of, relations_minimal)
from .core import DEFAULT_BOUND, format_poly, validate_quiver
from .cuts import cut_from_grading, qp_from_algebra, truncated_jacobian
from .errors import QPError
from .mutation import MutationStep, graded_premutate, mutate, premutate, split
from .potential import cyclic_derivative
from .qpdoc import (algebra_json, dumps, emit_algebra, emit_dot, emit_qp,
                    parse_algebra, parse_document, parse_qp, qp_json)
from .tilting import apr_tilt_detailed, mutation_chain

DEFAULT_CAP = 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _add_common(sub, bounds=True):
    sub.add_argument("file", nargs="?", default="-",
                     help="input document (default: stdin)")
    sub.add_argument("--json", action="store_true", help="emit JSON")
    if bounds:
        sub.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                         help="truncation bound for path lengths")
        sub.add_argument("--cap", type=int, default=DEFAULT_CAP,
                         help="resolution length cap")


def _qp_with_cut(args):
    g, cut = parse_qp(_read(args.file))
    return g, cut


def cmd_check(args) -> int:
    doc = parse_document(_read(args.file))
    out: dict = {"kind": doc.kind}
    if doc.kind == "qp":
        quiver_report = validate_quiver(doc.qp.quiver)
        out["quiver"] = {"errors": quiver_report.errors,
                         "warnings": quiver_report.warnings}
        cut = doc.cut if doc.cut is not None else frozenset()
        report = check_algebraic_cut(doc.qp, cut, bound=args.bound, cap=args.cap)
        out["cut_valid"] = report.cut.valid
        out["reduced"] = report.reduced
        out["stabilized"] = report.stabilized
        out["dimension"] = report.dimension
        out["global_dimension"] = report.gldim
        out["relations_minimal"] = (report.minimality.minimal
                                    if report.minimality else None)
        out["algebraic_cut"] = report.algebraic
        out["reduced_with_algebraic_cut"] = report.reduced_with_algebraic_cut
        text = report.summary()
        if quiver_report.warnings:
            text = "\n".join(f"warning: {w}" for w in quiver_report.warnings) + "\n" + text
    else:
        quiver_report = validate_quiver(doc.presentation.quiver)
        out["quiver"] = {"errors": quiver_report.errors,
                         "warnings": quiver_report.warnings}
        rep = relations_minimal(doc.presentation, bound=args.bound)
        out["relations_minimal"] = rep.minimal
        out["redundant"] = rep.redundant
        text = rep.summary()
    print(dumps(out) if args.json else text, end="" if args.json else "\n")
    return 0


def cmd_derive(args) -> int:
    g, _ = _qp_with_cut(args)
    poly = cyclic_derivative(g.potential, args.arrow, g.quiver)
    if args.json:
        from .qpdoc import poly_terms_json
        print(dumps({"arrow": args.arrow, "terms": poly_terms_json(poly),
                     "text": format_poly(poly)}), end="")
    else:
        print(format_poly(poly))
    return 0


def cmd_mutate(args) -> int:
    g, cut = _qp_with_cut(args)
    if args.side == "ungraded":
        step = MutationStep(args.vertex, "ungraded")
        result = (premutate(g, args.vertex, "ungraded") if args.no_reduce
                  else mutate(g, step, bound=args.bound))
    else:
        result = (graded_premutate(g, args.vertex, args.side) if args.no_reduce
                  else mutate(g, MutationStep(args.vertex, args.side),
                              bound=args.bound))
    out_cut = None
    try:
        out_cut = cut_from_grading(result) or None
    except QPError:
        pass
    print(dumps(qp_json(result, out_cut)) if args.json
          else emit_qp(result, out_cut), end="")
    return 0


def cmd_reduce(args) -> int:
    g, _ = _qp_with_cut(args)
    parts = split(g, bound=args.bound)
    reduced_cut = None
    try:
        reduced_cut = cut_from_grading(parts.reduced) or None
    except QPError:
        pass
    if args.json:
        print(dumps({
            "reduced": qp_json(parts.reduced, reduced_cut),
            "trivial": qp_json(parts.trivial),
            "removed_arrows": sorted(parts.removed_arrows),
        }), end="")
    else:
        print(emit_qp(parts.reduced, reduced_cut), end="")
    return 0


def cmd_from_algebra(args) -> int:
    p = parse_algebra(_read(args.file))
    g, cut = qp_from_algebra(p)
    print(dumps(qp_json(g, cut)) if args.json else emit_qp(g, cut), end="")
    return 0


def cmd_truncate(args) -> int:
    g, doc_cut = _qp_with_cut(args)
    cut = frozenset(args.cut.replace(",", " ").split()) if args.cut else doc_cut
    if cut is None:
        raise QPError("no cut given and none stored in the document")
    p = truncated_jacobian(g, cut)
    print(dumps(algebra_json(p)) if args.json else emit_algebra(p), end="")
    return 0


def cmd_apr_tilt(args) -> int:
    p = parse_algebra(_read(args.file))
    result = apr_tilt_detailed(p, args.source, bound=args.bound, cap=args.cap,
                               skip_hypothesis_check=args.force)
    if args.json:
        print(dumps({
            "source": args.source,
            "injective_dimension": result.injective_dimension,
            "qp": qp_json(result.qp, result.cut),
            "premutation": qp_json(result.premutation, result.premutation_cut),
            "reduced": qp_json(result.split.reduced, result.reduced_cut),
            "trivial": qp_json(result.split.trivial),
            "presentation": algebra_json(result.presentation),
        }), end="")
    else:
        print(emit_algebra(result.presentation), end="")
    return 0


def _parse_steps(spec: str) -> list[MutationStep]:
    steps = []
    for token in spec.replace(",", " ").split():
        token = token.strip()
        side = {"L": "left", "R": "right"}.get(token[-1].upper())
        if side is None or len(token) < 2:
            raise QPError(f"bad step {token!r}; use forms like 1L or 4R")
        steps.append(MutationStep(token[:-1], side))
    return steps


def cmd_chain(args) -> int:
    g, cut = _qp_with_cut(args)
    if cut is None:
        raise QPError("chain needs a document with a cut")
    trace = mutation_chain(g, cut, _parse_steps(args.steps), bound=args.bound,
                           cap=args.cap, require_algebraic_start=args.require_algebraic_start,
                           check_intermediates=args.check_intermediates)
    if args.json:
        print(dumps({
            "start": qp_json(trace.start, trace.start_cut),
            "steps": [{"vertex": s.vertex, "side": s.side} for s in trace.steps],
            "states": [qp_json(state, c) for state, c in trace.states],
            "presentations": [algebra_json(p) for p in trace.presentations],
        }), end="")
    else:
        final, final_cut = trace.final
        print(emit_qp(final, final_cut or None), end="")
    return 0


def cmd_gldim(args) -> int:
    doc = parse_document(_read(args.file))
    if doc.kind == "algebra":
        p = doc.presentation
    else:
        if doc.cut is None:
            raise QPError("gldim on a QP document needs a cut")
        p = truncated_jacobian(doc.qp, doc.cut)
    value = global_dimension(p, cap=args.cap, bound=args.bound)
    print(dumps({"global_dimension": value}) if args.json else value, end="" if args.json else "\n")
    return 0


def cmd_dim(args) -> int:
    doc = parse_document(_read(args.file))
    if doc.kind == "algebra":
        nfb = basis_of(doc.presentation, bound=args.bound)
        dim, stab = nfb.dimension, nfb.stabilized
    elif doc.cut is not None:
        nfb = basis_of(truncated_jacobian(doc.qp, doc.cut), bound=args.bound)
        dim, stab = nfb.dimension, nfb.stabilized
    else:
        dim, stab = jacobian_dimension(doc.qp, bound=args.bound)
    if args.json:
        print(dumps({"dimension": dim, "stabilized": stab}), end="")
    else:
        note = "" if stab else f" (truncated at bound {args.bound}, not stabilized)"
        print(f"{dim}{note}")
    return 0


def cmd_dot(args) -> int:
    doc = parse_document(_read(args.file))
    if doc.kind == "algebra":
        from .potential import GradedQP
        from .core import PathPoly
        g = GradedQP(doc.presentation.quiver, PathPoly.zero())
        print(emit_dot(g), end="")
    else:
        print(emit_dot(doc.qp, doc.cut), end="")
    return 0


def cmd_example(args) -> int:
    if args.name is None:
        from . import example_names
        for name in example_names():
            print(name)
        return 0
    print(load_example(args.name), end="")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpmut",
        description="mutate quivers with potential, truncate Jacobian algebras, "
                    "and compute tilt presentations")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="validate a document and run the algebraic-cut report")
    _add_common(s)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("derive", help="cyclic derivative of the potential by one arrow")
    _add_common(s, bounds=False)
    s.add_argument("--arrow", required=True)
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("mutate", help="mutate at a vertex")
    _add_common(s)
    s.add_argument("--vertex", required=True)
    s.add_argument("--side", choices=["left", "right", "ungraded"], default="left")
    s.add_argument("--no-reduce", action="store_true",
                   help="stop after premutation")
    s.set_defaults(func=cmd_mutate)

    s = sub.add_parser("reduce", help="split off the trivial part")
    _add_common(s)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("from-algebra", help="QP and cut associated with an algebra")
    _add_common(s, bounds=False)
    s.set_defaults(func=cmd_from_algebra)

    s = sub.add_parser("truncate", help="truncated Jacobian algebra of a QP with cut")
    _add_common(s, bounds=False)
    s.add_argument("--cut", help="arrow names (comma or space separated); "
                                 "defaults to the document's cut")
    s.set_defaults(func=cmd_truncate)

    s = sub.add_parser("apr-tilt", help="tilt presentation at a source vertex")
    _add_common(s)
    s.add_argument("--source", required=True)
    s.add_argument("--force", action="store_true",
                   help="emit the formula output even when the injective-"
                        "dimension hypothesis fails")
    s.set_defaults(func=cmd_apr_tilt)

    s = sub.add_parser("chain", help="iterated mutation through strict sources/sinks")
    _add_common(s)
    s.add_argument("--steps", required=True, help='e.g. "1L,2L,3L"')
    s.add_argument("--require-algebraic-start", action="store_true",
                   help="verify the start is a reduced QP with algebraic cut")
    s.add_argument("--check-intermediates", action="store_true",
                   help="verify every state keeps an algebraic cut")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("gldim", help="global dimension of an algebra document")
    _add_common(s)
    s.set_defaults(func=cmd_gldim)

    s = sub.add_parser("dim", help="degree-bounded dimension")
    _add_common(s)
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("dot", help="DOT graph; cut arrows dashed")
    _add_common(s, bounds=False)
    s.set_defaults(func=cmd_dot)

    s = sub.add_parser("example", help="print a bundled example document")
    s.add_argument("name", nargs="?", help="list names when omitted")
    s.set_defaults(func=cmd_example)

    s = sub.add_parser("serve", help="run the HTTP session service")
    s.add_argument("--port", type=int, default=8000)
    s.add_argument("--host", default="127.0.0.1")
    s.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    sys.exit(main())
