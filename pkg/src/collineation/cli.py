"""Command-line front end.

Exit codes: 0 success, 1 collineation undefined, 2 bad input, 3 table mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from typing import Optional, Sequence

from .catalog import get_entry, load_catalog, reproduce_tables
from .classify import classify_tensor
from .errors import CollineationError, NotConciseWarning
from .ideals import implicitize
from .nets import SIGMA3_MAX_RANK
from .pencils import build_pencil, classify_pencil, format_blocks, parse_blocks, pencil_base_degree, stratum_dimension
from .scalars import parse_field
from .tensors import Tensor3, concise_reduce, linear_matrix, minors, span_basis, strassen_flattening

FIELD_ENV = "COLLINEATION_FIELD"

EXIT_OK, EXIT_UNDEFINED, EXIT_BAD_INPUT, EXIT_MISMATCH = 0, 1, 2, 3


class BadInput(Exception):
    pass


def _field(args):
    spec = args.field or os.environ.get(FIELD_ENV)
    return parse_field(spec) if spec else None


def _load_tensor(args) -> Tensor3:
    field = _field(args)
    if getattr(args, "entry", None):
        lam = getattr(args, "lam", None)
        return get_entry(args.entry, lam=lam, field=field or parse_field("qq")).tensor
    if not args.input:
        raise BadInput("give --input FILE (or - for stdin) or --entry NAME")
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    except OSError as exc:
        raise BadInput(str(exc)) from exc
    try:
        T = Tensor3.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise BadInput(f"cannot read tensor: {exc}") from exc
    return T.to_field(field) if field else T


def _add_tensor_args(p):
    src = p.add_argument_group("tensor")
    src.add_argument("--input", help="tensor JSON file, or - for stdin")
    src.add_argument("--entry", help="catalog entry name instead of --input, e.g. IV.ps or cuboid(1,0,1)")
    src.add_argument("--lambda", dest="lam", help="parameter for catalog families")


def _add_common(p):
    p.add_argument("--field", help=f"qq or gf:p (default qq, or ${FIELD_ENV})")
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="collineation", description="Collineation varieties of order-3 tensors.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the collineation variety of a tensor")
    _add_tensor_args(p)
    p.add_argument("--factor", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--k", type=int, default=2)
    _add_common(p)

    pencil = sub.add_parser("pencil", help="matrix pencils").add_subparsers(dest="pencil_command", required=True)
    p = pencil.add_parser("classify", help="classify a block pencil")
    p.add_argument("--blocks", required=True, help='Kronecker blocks, e.g. "L2+J3(1)+R1"')
    p.add_argument("--k", type=int, default=2)
    _add_common(p)
    p = pencil.add_parser("strata", help="dimensions of pencil strata")
    for name in ("n2", "n3", "k", "s"):
        p.add_argument(f"--{name}", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("strassen", help="Strassen flattening rank of a 3x3x3 tensor")
    _add_tensor_args(p)
    _add_common(p)

    p = sub.add_parser("oracle", help="implicitize the minors map of a tensor")
    _add_tensor_args(p)
    p.add_argument("--factor", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--k", type=int, default=2)
    _add_common(p)

    cat = sub.add_parser("catalog", help="catalog of normal forms").add_subparsers(dest="catalog_command", required=True)
    p = cat.add_parser("list", help="list catalog entries")
    _add_common(p)
    p = cat.add_parser("reproduce", help="classify every catalog entry and compare")
    p.add_argument("--lambda", dest="lambdas", action="append", help="value for the lambda families (repeatable)")
    p.add_argument("--cuboids", type=int, default=5, help="number of smooth cuboid samples")
    p.add_argument("--jobs", type=int, default=1)
    _add_common(p)
    return parser


def _render(obj, output: str) -> str:
    if output == "json":
        return json.dumps(obj, sort_keys=True)
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for key in sorted(value):
                walk(f"{prefix}{key}.", value[key])
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                walk(f"{prefix}{i}.", item)
        else:
            lines.append(f"{prefix.rstrip('.')}: {value}")

    walk("", obj)
    return "\n".join(lines)


def _cmd_classify(args) -> tuple:
    T = _load_tensor(args)
    report = classify_tensor(T, args.factor, args.k)
    return report, EXIT_UNDEFINED if report["label"] == "Undefined" else EXIT_OK


def _cmd_pencil(args) -> tuple:
    if args.pencil_command == "strata":
        dims = stratum_dimension(args.n2, args.n3, args.k, args.s)
        return {"dims": dims}, EXIT_OK
    field = _field(args) or parse_field("qq")
    blocks = parse_blocks(args.blocks)
    T = build_pencil(blocks, field)
    label = classify_pencil(T, args.k)
    report = {"blocks": format_blocks(blocks), "shape": list(T.dims[1:]), "k": args.k, "label": label.name, "span": label.span}
    if label.kind == "Undefined":
        report["reason"] = label.reason
        return report, EXIT_UNDEFINED
    report["p"] = pencil_base_degree(T, args.k)
    return report, EXIT_OK


def _cmd_strassen(args) -> tuple:
    T = _load_tensor(args)
    s = strassen_flattening(T)
    return {"rank": s.rank, "sigma3": s.rank <= SIGMA3_MAX_RANK}, EXIT_OK


def _cmd_oracle(args) -> tuple:
    T = _load_tensor(args)
    core, _ = concise_reduce(T)
    basis = span_basis(minors(linear_matrix(core, args.factor), args.k))
    if not basis:
        return {"label": "Undefined", "reason": f"all {args.k}x{args.k} minors vanish"}, EXIT_UNDEFINED
    image = implicitize(basis)
    return {
        "dim": image.hilbert.dim,
        "deg": image.hilbert.degree,
        "span": image.span_dim,
        "ideal": [str(g) for g in image.ideal.gens],
    }, EXIT_OK


def _cmd_catalog(args) -> tuple:
    if args.catalog_command == "list":
        rows = []
        for e in load_catalog():
            row = {"name": e.name, "group": e.group, "expected": {str(f): lab.name for f, lab in sorted(e.expected.items())}}
            if e.needs_lambda:
                row["parameters"] = ["lambda"]
            if e.family:
                row["parameters"] = list(e.params)
            rows.append(row)
        return {"entries": rows}, EXIT_OK
    field = _field(args) or parse_field("qq")
    lambdas = args.lambdas or ["2", "-3"]
    report = reproduce_tables(field=field, lambdas=lambdas, n_cuboids=args.cuboids, seed=args.seed, jobs=args.jobs)
    return report, EXIT_OK if report["ok"] else EXIT_MISMATCH


COMMANDS = {
    "classify": _cmd_classify,
    "pencil": _cmd_pencil,
    "strassen": _cmd_strassen,
    "oracle": _cmd_oracle,
    "catalog": _cmd_catalog,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    """Parse ``argv``, run the command, print the report and return the exit code."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NotConciseWarning)
            report, code = COMMANDS[args.command](args)
    except (BadInput, CollineationError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    print(_render(report, args.output), file=stdout)
    return code


def main() -> None:
    sys.exit(run())
