"""Command-line interface: ``liecurv COMMAND SOURCE [options]``.

``SOURCE`` is an algebra file (JSON) or a catalog name; catalog parameters are
given with ``--n``/``--dim`` and ``--alpha``.  Exit codes: 0 success, 1 input
or validation error, 2 internal fault.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Sequence

from . import reports
from .algebra import InvalidAlgebraError, MetricLieAlgebra
from .catalog import CATALOG, CatalogError, catalog_entry
from .io import (
    FormatError,
    dump_algebra,
    dumps_report,
    load_algebra,
    load_complex_structure,
    load_wedge_basis,
    to_data,
)
from .scalars import ScalarError

INPUT_ERRORS = (
    FormatError,
    CatalogError,
    InvalidAlgebraError,
    ScalarError,
    ValueError,
    KeyError,
    IndexError,
    OSError,
)


class UsageError(ValueError):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--float", action="store_true", help="print floating-point values")
    p.add_argument("--tol", type=float, default=None, help="float mode: print |x| < T as 0")


def _source(p: argparse.ArgumentParser) -> None:
    p.add_argument("source", help="algebra JSON file or catalog name")
    p.add_argument("--n", "--dim", dest="n", type=int, default=None, help="catalog parameter n")
    p.add_argument("--alpha", default=None, help="catalog parameter alpha, comma separated")


def _vertical(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument(
        "--vertical", required=required, default=None,
        help="comma-separated vertical basis vectors (labels or 0-based indices)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liecurv", description=__doc__.splitlines()[0])
    parser.add_argument("--convention", action="store_true", help="print the sign conventions and exit")
    sub = parser.add_subparsers(dest="command")

    def cmd(name: str, help: str, source: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if source:
            _source(p)
        _common(p)
        return p

    cmd("validate", "check antisymmetry and the Jacobi identity")
    p = cmd("curvature", "connection, Riemann tensor, Ricci matrix and curvature operator")
    p.add_argument("--basis-order", default=None)
    cmd("ricci", "Ricci matrix")
    cmd("einstein", "Einstein verdict")
    p = cmd("operator", "curvature operator on the exterior square")
    p.add_argument("--basis-order", default=None, help="wedge basis file, or 'catalog' for the shipped ordering")
    p = cmd("foliation", "classify the foliation of a coordinate subalgebra")
    _vertical(p, True)
    cmd("scan", "classify every coordinate codimension-two split")
    p = cmd("complex", "adapted almost complex structures")
    _vertical(p, True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--j", default=None, help="J file (row-major matrix of scalars)")
    g.add_argument("--sample", type=int, default=None, help="number of random adapted J")
    p.add_argument("--seed", type=int, default=0)
    p = cmd("obstruction", "paired-eigenvalue test for Einstein algebras")
    _vertical(p, False)
    p = cmd("catalog", "list catalog entries or print one", source=False)
    p.add_argument("name", nargs="?")
    p.add_argument("params", nargs="*", help="key=value parameters, e.g. n=3 or alpha=1,0,0")
    p = cmd("report", "run the analysis pipeline")
    p.add_argument("--all", action="store_true", help="all analyses plus the catalog's default splits")
    p.add_argument("--foliation", action="append", default=[], help="vertical list; repeatable")
    p.add_argument("--basis-order", default=None)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--j", default=None)
    g.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    cmd("conventions", "print the sign conventions", source=False)
    return parser


def _catalog_params(name: str, n: int | None, alpha: str | None) -> dict:
    entry = catalog_entry(name)
    params: dict[str, Any] = {}
    if n is not None:
        if "n" not in entry.params:
            raise UsageError(f"catalog entry {name!r} takes no n/dim parameter")
        params["n"] = n
    if alpha is not None:
        if "alpha" not in entry.params:
            raise UsageError(f"catalog entry {name!r} takes no alpha parameter")
        params["alpha"] = alpha
    return params


def resolve_algebra(source: str, n: int | None = None, alpha: str | None = None) -> MetricLieAlgebra:
    path = Path(source)
    if path.is_file():
        alg = load_algebra(path)
    elif source in CATALOG:
        alg = catalog_entry(source).build(**_catalog_params(source, n, alpha))
    else:
        raise UsageError(f"{source!r} is neither a file nor a catalog entry ({', '.join(sorted(CATALOG))})")
    alg.require_valid()
    return alg


def _split_list(text: str) -> list[str]:
    items = [s.strip() for s in text.split(",") if s.strip()]
    if not items:
        raise UsageError("empty vertical list")
    return items


def _basis(args, alg: MetricLieAlgebra):
    order = getattr(args, "basis_order", None)
    if order is None:
        return None
    if order == "catalog":
        name = args.source
        if name not in CATALOG or CATALOG[name].basis_file is None:
            raise UsageError(f"no shipped wedge ordering for {name!r}")
        return CATALOG[name].basis()
    return load_wedge_basis(order, alg)


def _run(args) -> Any:
    c = args.command
    if c == "conventions":
        return reports.conventions_report()
    if c == "catalog":
        if not args.name:
            return {
                "entries": [
                    {"name": e.name, "params": list(e.params), "has_basis_order": e.basis_file is not None}
                    for e in CATALOG.values()
                ]
            }
        entry = catalog_entry(args.name)
        params = {}
        for kv in args.params:
            if "=" not in kv:
                raise UsageError(f"parameter {kv!r} is not key=value")
            k, v = kv.split("=", 1)
            params[k] = int(v) if k == "n" else v
        alg = entry.build(**params)
        out = {"algebra": dump_algebra(alg), "default_splits": entry.splits(alg), "expected": entry.expected}
        if entry.basis_file:
            out["basis_order"] = [[alg.labels[i], alg.labels[j]] for i, j in entry.basis().pairs]
        return out
    if c == "validate":
        path = Path(args.source)
        if path.is_file():
            alg = load_algebra(path)
        else:
            alg = catalog_entry(args.source).build(**_catalog_params(args.source, args.n, args.alpha))
        rep = reports.validation_report(alg)
        if not rep["valid"]:
            args._exit = 1
        return rep
    alg = resolve_algebra(args.source, args.n, args.alpha)
    if c == "curvature":
        return reports.curvature_report(alg, _basis(args, alg))
    if c == "ricci":
        return reports.ricci_report(alg)
    if c == "einstein":
        return reports.einstein_report(alg)
    if c == "operator":
        return reports.operator_report(alg, _basis(args, alg))
    if c == "foliation":
        return reports.foliation_report(alg, _split_list(args.vertical))
    if c == "scan":
        return reports.scan_report(alg)
    if c == "complex":
        j = load_complex_structure(args.j) if args.j else None
        return reports.complex_report(alg, _split_list(args.vertical), j, args.sample, args.seed)
    if c == "obstruction":
        vertical = _split_list(args.vertical) if args.vertical else None
        return reports.obstruction_report(alg, vertical)
    if c == "report":
        analyses = reports.ANALYSES if args.all else ("validate", "einstein")
        foliations = [_split_list(f) for f in args.foliation]
        if args.all and not foliations and args.source in CATALOG:
            foliations = CATALOG[args.source].splits(alg)
        j = load_complex_structure(args.j) if args.j else None
        return reports.run_report(alg, analyses, foliations, _basis(args, alg), j, args.sample, args.seed)
    raise UsageError(f"unknown command {c!r}")  # pragma: no cover


def render_text(data: Any, indent: int = 0) -> str:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(data, dict):
        for k, v in data.items():
            if _is_leaf(v) or _is_flat_list(v):
                lines.append(f"{pad}{k}: {_leaf(v)}")
            else:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
    elif isinstance(data, list):
        for v in data:
            if _is_leaf(v) or _is_flat_list(v):
                lines.append(f"{pad}- {_leaf(v)}")
            else:
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
    else:
        lines.append(pad + _leaf(data))
    return "\n".join(l for l in lines if l)


def _is_leaf(v: Any) -> bool:
    return not isinstance(v, (dict, list))


def _is_flat_list(v: Any) -> bool:
    return isinstance(v, list) and all(_is_leaf(x) for x in v)


def _leaf(v: Any) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_leaf(x) for x in v) + "]"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.convention:
        sys.stdout.write(dumps_report(reports.conventions_report()))
        return 0
    if not args.command:
        parser.print_help(sys.stderr)
        return 1
    if args.tol is not None and not args.float:
        print("error: --tol only applies with --float", file=sys.stderr)
        return 1
    args._exit = 0
    try:
        result = _run(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    data = to_data(result, args.float, args.tol)
    if args.format == "json":
        sys.stdout.write(dumps_report(data))
    else:
        sys.stdout.write(render_text(data) + "\n")
    return args._exit


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
