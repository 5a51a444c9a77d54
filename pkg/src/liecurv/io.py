"""File formats (algebra, almost complex structure, wedge basis) and report serialization.

Algebra files are UTF-8 JSON::

    {"dim": 3, "labels": ["X", "Y", "Z"],
     "brackets": [{"i": 0, "j": 1, "k": 2, "coeff": "1"}]}

Indices are 0-based with ``i < j``; omitted brackets are zero.  Coefficients
use the scalar grammar (``"1/3*sqrt(6)"``, ``"-2/30*sqrt(5)"``, ``"13/30"``).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .algebra import MetricLieAlgebra
from .complex_structures import AlmostComplexStructure
from .polynomials import ExactPolynomial
from .scalars import ComplexScalar, Scalar, parse_scalar, to_float
from .wedge import WedgeBasis

__all__ = [
    "FormatError",
    "load_algebra",
    "parse_algebra",
    "dump_algebra",
    "load_complex_structure",
    "parse_complex_structure",
    "load_wedge_basis",
    "parse_wedge_basis",
    "to_data",
    "dumps_report",
]


class FormatError(ValueError):
    pass


def _read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc


def _scalar(x: Any, where: str) -> Scalar:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise FormatError(f"{where}: expected an integer or scalar string, got {x!r}")
    try:
        return parse_scalar(str(x))
    except (ValueError, ArithmeticError) as exc:
        raise FormatError(f"{where}: {exc}") from exc


def parse_algebra(data: Any) -> MetricLieAlgebra:
    if not isinstance(data, dict):
        raise FormatError("algebra file must be a JSON object")
    for key in ("metric", "gram"):
        if key in data:
            raise FormatError(f"'{key}' is not supported: bases are orthonormal by definition")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FormatError("'dim' must be a positive integer")
    labels = data.get("labels") or ()
    if labels and (len(labels) != dim or not all(isinstance(s, str) for s in labels)):
        raise FormatError(f"'labels' must be {dim} strings")
    if len(set(labels)) != len(labels):
        raise FormatError("'labels' must be distinct")
    records = []
    seen = set()
    for n, rec in enumerate(data.get("brackets") or []):
        where = f"brackets[{n}]"
        if not isinstance(rec, dict) or not {"i", "j", "k", "coeff"} <= set(rec):
            raise FormatError(f"{where}: need fields i, j, k, coeff")
        i, j, k = rec["i"], rec["j"], rec["k"]
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (i, j, k)):
            raise FormatError(f"{where}: indices must be integers")
        if not i < j:
            raise FormatError(f"{where}: need i < j, got i={i}, j={j}")
        if not (0 <= i and j < dim and 0 <= k < dim):
            raise FormatError(f"{where}: index out of range for dim {dim}")
        if (i, j, k) in seen:
            raise FormatError(f"{where}: duplicate entry for ({i}, {j}, {k})")
        seen.add((i, j, k))
        records.append((i, j, k, _scalar(rec["coeff"], where)))
    return MetricLieAlgebra.from_brackets(dim, records, tuple(labels), str(data.get("name", "")))


def load_algebra(path: str | Path) -> MetricLieAlgebra:
    return parse_algebra(_read_json(path))


def dump_algebra(alg: MetricLieAlgebra) -> dict:
    brackets = []
    for i in range(alg.n):
        for j in range(i + 1, alg.n):
            for k, v in enumerate(alg.c[i][j]):
                if v:
                    brackets.append({"i": i, "j": j, "k": k, "coeff": str(v)})
    out: dict = {"dim": alg.n, "labels": list(alg.labels), "brackets": brackets}
    if alg.name:
        out["name"] = alg.name
    return out


def parse_complex_structure(data: Any) -> AlmostComplexStructure:
    rows = data.get("J") if isinstance(data, dict) else data
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise FormatError("J file must be a list of rows (row-major)")
    return AlmostComplexStructure(
        tuple(tuple(_scalar(x, f"J[{a}][{b}]") for b, x in enumerate(r)) for a, r in enumerate(rows))
    )


def load_complex_structure(path: str | Path) -> AlmostComplexStructure:
    return parse_complex_structure(_read_json(path))


def parse_wedge_basis(data: Any, alg: MetricLieAlgebra) -> WedgeBasis:
    pairs = data.get("pairs") if isinstance(data, dict) else data
    if not isinstance(pairs, list) or not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise FormatError("wedge basis must be a list of index pairs")
    try:
        return WedgeBasis.from_labels(alg, pairs)
    except (KeyError, IndexError) as exc:
        raise FormatError(f"wedge basis: {exc}") from exc


def load_wedge_basis(path: str | Path, alg: MetricLieAlgebra) -> WedgeBasis:
    return parse_wedge_basis(_read_json(path), alg)


def to_data(obj: Any, float_mode: bool = False, tol: float | None = None) -> Any:
    """Convert results to JSON-ready data; scalars become grammar strings or floats."""
    if isinstance(obj, Scalar):
        if float_mode:
            x = to_float(obj)
            return 0.0 if tol is not None and abs(x) < tol else x
        return str(obj)
    if isinstance(obj, ComplexScalar):
        return {"re": to_data(obj.re, float_mode, tol), "im": to_data(obj.im, float_mode, tol)}
    if isinstance(obj, ExactPolynomial):
        return {
            "polynomial": str(obj),
            "degree": obj.degree,
            "coefficients": [to_data(c, float_mode, tol) for c in obj.coeffs],
        }
    if isinstance(obj, Fraction):
        return to_data(Scalar(obj), float_mode, tol)
    if isinstance(obj, float):
        return 0.0 if tol is not None and abs(obj) < tol else obj
    if isinstance(obj, dict):
        return {str(k): to_data(v, float_mode, tol) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_data(v, float_mode, tol) for v in obj]
    return obj


def dumps_report(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
