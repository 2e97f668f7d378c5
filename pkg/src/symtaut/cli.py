"""Command-line front end.

Exit codes: 0 on success, 2 for invalid parameters or expressions, 3 when a
verification sweep or a face certificate fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report
from .classes import (
    bn_canonical_class,
    bn_face_generator,
    bn_locus_class,
    diagonal_dual_divisor,
    hyperelliptic_bn_class,
    hyperelliptic_face_generator,
    subordinate_class,
    subordinate_face_generator,
)
from .faces import NoRegimeError, face_chain, region_map
from .ring import (
    CurveKind,
    CurveParams,
    ParameterError,
    eval_top,
    parse_class,
    pretty,
    normal_form,
    to_json_dict,
)
from .verify import run_scope

FAMILIES = (
    "cdr",
    "clbn",
    "subordinate",
    "gamma",
    "upsilon",
    "upsilon-hyper",
    "cdr-hyper",
    "eta",
)


def _add_context_options(parser: argparse.ArgumentParser):
    parser.add_argument("--genus", "-g", type=int, required=True, help="curve genus")
    parser.add_argument(
        "--degree", "-d", type=int, required=True, help="symmetric product degree"
    )
    parser.add_argument(
        "--curve",
        choices=[kind.value for kind in CurveKind],
        default=CurveKind.BN_GENERAL.value,
        help="curve kind",
    )
    parser.add_argument(
        "--gonality-file",
        type=Path,
        default=None,
        help="JSON map r -> gonality index for custom curves",
    )


def _add_output_options(parser: argparse.ArgumentParser, formats=("text", "json")):
    parser.add_argument("--format", choices=formats, default="text")
    parser.add_argument("--out", type=Path, default=None, help="output path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symtaut",
        description=(
            "Exact computations in the tautological ring of a symmetric product "
            "of a curve: classes, theta filtration, Abel-Jacobi face chains."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression in x and theta")
    p_eval.add_argument("expr", help="e.g. 'theta^2/2 - x*theta + x^2'")
    _add_context_options(p_eval)
    _add_output_options(p_eval)

    p_class = sub.add_parser("class", help="compute a named cycle class")
    p_class.add_argument("family", choices=FAMILIES)
    _add_context_options(p_class)
    p_class.add_argument("--rank", "-r", type=int, help="linear series dimension r")
    p_class.add_argument("--dim", "-n", type=int, help="cycle or series dimension n")
    p_class.add_argument("--index", "-i", type=int, help="base point shift i")
    p_class.add_argument(
        "--series-degree", "-l", type=int, help="degree of the fixed linear system"
    )
    _add_output_options(p_class)

    p_chain = sub.add_parser("chain", help="Abel-Jacobi face chain in one dimension")
    _add_context_options(p_chain)
    p_chain.add_argument("--dim", "-n", type=int, required=True, help="cycle dimension")
    _add_output_options(p_chain)

    p_region = sub.add_parser("region", help="region map over the (n, m) grid")
    p_region.add_argument("--genus", "-g", type=int, required=True)
    p_region.add_argument(
        "--degree", "-d", type=int, required=True, help="grid extent in each direction"
    )
    p_region.add_argument(
        "--curve",
        choices=[kind.value for kind in CurveKind],
        default=CurveKind.BN_GENERAL.value,
    )
    p_region.add_argument("--gonality-file", type=Path, default=None)
    _add_output_options(p_region, formats=("text", "json", "svg"))

    p_verify = sub.add_parser("verify", help="run the invariant sweeps")
    p_verify.add_argument(
        "scope", choices=("all", "ring", "filtration", "classes", "faces")
    )
    p_verify.add_argument("--max-genus", type=int, default=5)
    p_verify.add_argument("--max-degree", type=int, default=10)
    return parser


def _load_overrides(path: Path | None) -> dict:
    if path is None:
        return {}
    raw = json.loads(path.read_text())
    return {int(key): int(value) for key, value in raw.items()}


def _context(args) -> CurveParams:
    return CurveParams(
        args.genus,
        args.degree,
        CurveKind(args.curve),
        _load_overrides(getattr(args, "gonality_file", None)),
    )


def _emit(payload, out: Path | None) -> None:
    if isinstance(payload, bytes):
        if out is None:
            sys.stdout.write(payload.decode("utf-8"))
        else:
            out.write_bytes(payload)
    else:
        if out is None:
            sys.stdout.write(payload)
        else:
            out.write_text(payload)


def _require_option(value, name: str):
    if value is None:
        raise ParameterError(f"this family needs {name}")
    return value


def _family_class(args, ctx: CurveParams):
    family = args.family
    if family == "cdr":
        return bn_locus_class(ctx, _require_option(args.rank, "--rank"))
    if family == "clbn":
        return bn_canonical_class(ctx)
    if family == "subordinate":
        return subordinate_class(
            ctx,
            _require_option(args.series_degree, "--series-degree"),
            _require_option(args.dim, "--dim"),
        )
    if family == "gamma":
        return subordinate_face_generator(
            ctx, _require_option(args.dim, "--dim"), _require_option(args.index, "--index")
        )
    if family == "upsilon":
        return bn_face_generator(ctx, _require_option(args.index, "--index"))
    if family == "upsilon-hyper":
        return hyperelliptic_face_generator(
            ctx, _require_option(args.dim, "--dim"), _require_option(args.index, "--index")
        )
    if family == "cdr-hyper":
        return hyperelliptic_bn_class(ctx, _require_option(args.rank, "--rank"))
    return diagonal_dual_divisor(ctx)


def _cmd_eval(args) -> int:
    ctx = _context(args)
    cls = parse_class(args.expr, ctx)
    top = eval_top(cls) if cls.codim == ctx.d else None
    if args.format == "json":
        data = {
            "input": args.expr,
            "class": to_json_dict(cls),
            "normal_form": [str(c) for c in normal_form(cls).coords],
            "top_intersection": None if top is None else str(top),
        }
        _emit(report.to_json(data), args.out)
    else:
        nf = normal_form(cls)
        lines = [
            f"input: {args.expr}",
            f"class: {pretty(cls)}  (codim {cls.codim})",
            f"normal form: {pretty(nf.as_class())}"
            f"  (coords: ({', '.join(str(c) for c in nf.coords)}))",
        ]
        if top is not None:
            lines.append(f"top intersection number: {top}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_class(args) -> int:
    ctx = _context(args)
    cls = _family_class(args, ctx)
    if args.format == "json":
        _emit(report.to_json(report.class_json_dict(cls)), args.out)
    else:
        header = f"family {args.family}  g={ctx.g} d={ctx.d} curve={ctx.kind.value}"
        _emit(report.class_text(cls, header), args.out)
    return 0


def _cmd_chain(args) -> int:
    ctx = _context(args)
    try:
        chain = face_chain(ctx, args.dim)
    except NoRegimeError:
        if args.format == "json":
            _emit(report.to_json(report.bounds_json_dict(ctx, args.dim)), args.out)
        else:
            _emit(report.bounds_text(ctx, args.dim), args.out)
        return 0
    if args.format == "json":
        _emit(report.to_json(report.chain_json_dict(chain)), args.out)
    else:
        _emit(report.chain_text(chain), args.out)
    return 0 if chain.all_perfect else 3


def _cmd_region(args) -> int:
    kind = CurveKind(args.curve)
    overrides = _load_overrides(args.gonality_file)
    cells = region_map(args.genus, kind, args.degree, overrides)
    if args.format == "json":
        _emit(report.to_json(report.region_json_dict(args.genus, kind, args.degree, cells)), args.out)
    elif args.format == "svg":
        payload = report.region_svg(args.genus, kind, args.degree, cells)
        _emit(payload, args.out)
        if args.out is not None:
            args.out.with_suffix(".csv").write_text(report.region_csv(cells))
    else:
        _emit(report.region_text(args.genus, kind, args.degree, cells), args.out)
    return 0


def _cmd_verify(args) -> int:
    results = run_scope(args.scope, args.max_genus, args.max_degree)
    failed = False
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        line = f"{status}  {result.name}  ({result.cases} cases)"
        if not result.passed:
            failed = True
            line += f": {result.detail}"
        print(line)
    return 3 if failed else 0


_COMMANDS = {
    "eval": _cmd_eval,
    "class": _cmd_class,
    "chain": _cmd_chain,
    "region": _cmd_region,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
