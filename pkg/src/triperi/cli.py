"""Command line interface: ``triperi {verify,classify,solve,paper-table,materialize}``.

Exit codes: 0 success, 1 negative outcome (axioms fail, not perimeter
contracting, solver stalled), 2 usage/input errors, 3 period-two point met
by the solver.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .analysis import classify, perimeter_contraction_coefficient, worker_count
from .io import (
    FormatError,
    MetricAxiomError,
    load_fmap,
    load_fms,
    materialize_paper_space,
    save_fmap,
    save_fms,
)
from .mapping import MapError
from .metric import STAR, UnknownPointError, WindowError, verify_metric_axioms
from .numeric import CapacityError, format_scalar, parse_scalar
from .paper_spaces import (
    DEFAULT_WINDOW,
    PAPER_ALPHA,
    PaperSpaceParams,
    finite_triple_ratio,
    make_paper_space,
    make_three_point_example,
    star_triple_ratio,
)
from .report import (
    analysis_dict,
    axiom_dict,
    document,
    render_json,
    render_text,
    solve_dict,
)
from .solver import SolveStatus, picard_solve


class UsageError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser, with_map: bool) -> None:
    p.add_argument("space", nargs="?", help="FMS v1 space file")
    if with_map:
        p.add_argument("map", nargs="?", help="FMAP v1 map file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--paper-space", action="store_true", help="the countable shift space")
    g.add_argument("--paper-example", choices=["A", "B"], help="three-point example")
    p.add_argument("--scale", default="1", help="scale a of --paper-space (default 1)")
    p.add_argument("--window", type=int, default=None, help="enumeration index bound")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triperi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the metric axioms")
    _add_source(p, with_map=False)
    _add_format(p)

    p = sub.add_parser("classify", help="perimeter-contraction and Lipschitz coefficients")
    _add_source(p, with_map=True)
    _add_format(p)

    p = sub.add_parser("solve", help="fixed-point iteration with a priori bounds")
    _add_source(p, with_map=True)
    p.add_argument("--start", help="starting point name (index or '*' for --paper-space)")
    p.add_argument("--alpha", help="perimeter-contraction coefficient (default: 7/8 for "
                   "--paper-space, else the computed coefficient)")
    p.add_argument("--tol", default="1/1000000000")
    p.add_argument("--max-iter", type=int, default=1000)
    _add_format(p)

    p = sub.add_parser("paper-table", help="star-triple ratios and windowed maxima")
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    p.add_argument("--scale", default="1")
    _add_format(p)

    p = sub.add_parser("materialize", help="write a window of the shift space as FMS/FMAP")
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    p.add_argument("--scale", default="1")
    p.add_argument("--space-out", required=True)
    p.add_argument("--map-out")
    p.add_argument("--remap-boundary-to-star", action="store_true",
                   help="emit the restricted shift map with x_N -> x*")
    return parser


def _load(args, with_map: bool):
    """Return ``(space, map, inputs, window)``."""
    if args.paper_space:
        if args.space or getattr(args, "map", None):
            raise UsageError("files cannot be combined with --paper-space")
        window = DEFAULT_WINDOW if args.window is None else args.window
        params = PaperSpaceParams(scale=parse_scalar(args.scale), window=window)
        space, map = make_paper_space(params)
        inputs = {"builtin": "paper-space", "scale": format_scalar(params.scale), "window": window}
        return space, map, inputs, window
    if args.paper_example:
        if args.space or getattr(args, "map", None):
            raise UsageError("files cannot be combined with --paper-example")
        space, map = make_three_point_example(args.paper_example)
        return space, map, {"builtin": f"paper-example-{args.paper_example}"}, args.window
    if not args.space:
        raise UsageError("a space file or a builtin (--paper-space, --paper-example) is required")
    space = load_fms(args.space, verify=not (args.command == "verify"))
    inputs = {"space": args.space}
    map = None
    if with_map:
        if not args.map:
            raise UsageError("a map file is required")
        map = load_fmap(args.map, space)
        inputs["map"] = args.map
    return space, map, inputs, args.window


def _emit(doc, fmt: str) -> None:
    sys.stdout.write(render_json(doc) if fmt == "json" else render_text(doc))


def _point(space, token: str):
    if token in ("*", "x*", "star") and space.contains(STAR):
        return STAR
    if token.isdigit() and space.contains(STAR):
        return int(token)
    return space.lookup(token)


def cmd_verify(args) -> int:
    space, _, inputs, window = _load(args, with_map=False)
    report = verify_metric_axioms(space, window)
    _emit(document("verify", inputs, axiom_dict(space, report)), args.format)
    return 0 if report.passed else 1


def cmd_classify(args) -> int:
    space, map, inputs, window = _load(args, with_map=True)
    report = classify(space, map, window)
    result = analysis_dict(space, report)
    result["conditions_hold"] = report.is_perimeter_contracting and report.condition_i_holds
    _emit(document("classify", inputs, result), args.format)
    return 0 if result["conditions_hold"] else 1


def cmd_solve(args) -> int:
    space, map, inputs, window = _load(args, with_map=True)
    start = _point(space, args.start) if args.start else space.points(window)[0]
    if args.alpha is not None:
        alpha = parse_scalar(args.alpha)
    elif args.paper_space:
        alpha = PAPER_ALPHA
    else:
        alpha, _ = perimeter_contraction_coefficient(space, map, window)
        if alpha >= 1:
            raise UsageError(f"map does not contract perimeters (coefficient {alpha}); pass --alpha")
    tol = parse_scalar(args.tol, exact=space.exact)
    result = picard_solve(space, map, start, alpha, tol, args.max_iter)
    inputs = dict(inputs, start=space.name(start))
    _emit(document("solve", inputs, solve_dict(space, result)), args.format)
    return {
        SolveStatus.CONVERGED: 0,
        SolveStatus.REACHED_EXACT_FIXED_POINT: 0,
        SolveStatus.STALLED_BUDGET: 1,
        SolveStatus.CONDITION_I_VIOLATION: 3,
    }[result.status]


def paper_table(params: PaperSpaceParams) -> dict:
    """Star-triple ratios for ``i < N``, the closed-form maximum over index
    triples and the brute-force coefficient over the whole window."""
    n = params.window
    rows = [{"i": i, "ratio": format_scalar(star_triple_ratio(i, params))} for i in range(n)]
    best, best_w = None, None
    for i in range(n + 1):
        for k in range(i + 2, n + 1):
            r = finite_triple_ratio(i, i + 1, k, params)
            if best is None or r > best:
                best, best_w = r, (i, i + 1, k)
    space, map = make_paper_space(params)
    alpha, witness = perimeter_contraction_coefficient(space, map, n)
    return {
        "star_ratios": rows,
        "finite_max": format_scalar(best),
        "finite_max_witness": [f"x{i}" for i in best_w],
        "alpha_star": format_scalar(alpha),
        "alpha_witness": [space.name(p) for p in witness],
        "paper_alpha": format_scalar(PAPER_ALPHA),
        "certified": alpha <= PAPER_ALPHA,
        "window": n,
    }


def cmd_paper_table(args) -> int:
    params = PaperSpaceParams(scale=parse_scalar(args.scale), window=args.window)
    result = paper_table(params)
    inputs = {"builtin": "paper-space", "scale": format_scalar(params.scale), "window": args.window}
    _emit(document("paper-table", inputs, result), args.format)
    return 0 if result["certified"] else 1


def cmd_materialize(args) -> int:
    if args.map_out and not args.remap_boundary_to_star:
        raise UsageError(
            "refusing to write the shift map: the image of the boundary point lies "
            "outside the window; pass --remap-boundary-to-star to map it to x*"
        )
    params = PaperSpaceParams(scale=parse_scalar(args.scale), window=args.window)
    space, _ = make_paper_space(params)
    finite, map = materialize_paper_space(space, args.window, args.remap_boundary_to_star)
    save_fms(finite, args.space_out)
    if args.map_out:
        save_fmap(map, args.map_out)
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "classify": cmd_classify,
    "solve": cmd_solve,
    "paper-table": cmd_paper_table,
    "materialize": cmd_materialize,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        worker_count()
        return COMMANDS[args.command](args)
    except MetricAxiomError as exc:
        print(f"triperi: input is not a metric space: {exc}", file=sys.stderr)
        return 2
    except FormatError as exc:
        print(f"triperi: {exc}", file=sys.stderr)
        return 2
    except (UsageError, MapError, UnknownPointError, WindowError, CapacityError,
            ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"triperi: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
