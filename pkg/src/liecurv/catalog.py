"""Built-in metric Lie algebras: the two five-dimensional Einstein solvmanifolds,
the g1/g2 families, and a few small reference algebras."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable, Sequence

from .algebra import MetricLieAlgebra
from .scalars import Scalar, parse_scalar
from .wedge import WedgeBasis

__all__ = [
    "CatalogEntry",
    "CatalogError",
    "UnknownEntryError",
    "InvalidParamsError",
    "CATALOG",
    "catalog_build",
    "catalog_entry",
    "nikonorov5",
    "nikonorov4",
    "g1",
    "g2",
    "abelian",
    "so3",
    "heisenberg3",
    "catalog_basis",
]


class CatalogError(ValueError):
    pass


class UnknownEntryError(CatalogError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown catalog entry"


class InvalidParamsError(CatalogError):
    pass


_SOLV_LABELS = ("X1", "X2", "X3", "X4", "A")


def _solvmanifold(name: str, weights: Sequence[int], denom: int, nilradical) -> MetricLieAlgebra:
    # basis X1..X4, A with A last so every displayed wedge pair is increasing
    root = Scalar.sqrt(Fraction(1, denom))
    br: dict = {}
    for (i, j), comps in nilradical.items():
        br[(i, j)] = dict(comps)
    for j, w in enumerate(weights):
        br[(j, 4)] = {j: -root * w}  # [X_j, A] = -[A, X_j]
    alg = MetricLieAlgebra.from_brackets(5, br, _SOLV_LABELS, name)
    alg.require_valid()
    return alg


def nikonorov5() -> MetricLieAlgebra:
    """[X1,X2] = sqrt(2/3) X3, [X1,X3] = sqrt(2/3) X4, [A,Xj] = j/sqrt(30) Xj."""
    s = Scalar.sqrt(Fraction(2, 3))
    return _solvmanifold("nikonorov5", (1, 2, 3, 4), 30, {(0, 1): {2: s}, (0, 2): {3: s}})


def nikonorov4() -> MetricLieAlgebra:
    """[X1,X2] = sqrt(2/3) X3, [A,X1..X4] = (2, 2, 4, 3)/sqrt(33) X1..X4."""
    s = Scalar.sqrt(Fraction(2, 3))
    return _solvmanifold("nikonorov4", (2, 2, 4, 3), 33, {(0, 1): {2: s}})


def g1(n: int = 2) -> MetricLieAlgebra:
    """Basis W, X1..X_{n+1}; [W, X_k] = X_{k+1} for k = 1..n."""
    n = _positive_int(n, "n")
    labels = ["W"] + [f"X{k}" for k in range(1, n + 2)]
    br = {(0, k): {k + 1: 1} for k in range(1, n + 1)}
    return _checked(MetricLieAlgebra.from_brackets(n + 2, br, labels, f"g1(n={n})"))


def g2(alpha: Sequence = (1, 0, 0)) -> MetricLieAlgebra:
    """Basis W, X1..Xn; [W, X_k] = alpha_k X_k."""
    if isinstance(alpha, str):
        alpha = [a for a in alpha.split(",") if a.strip()]
    try:
        al = [a if isinstance(a, Scalar) else parse_scalar(str(a)) if isinstance(a, str) else Scalar(a)
              for a in alpha]
    except (ValueError, ArithmeticError, TypeError) as exc:
        raise InvalidParamsError(f"bad alpha vector {alpha!r}: {exc}") from exc
    if not al:
        raise InvalidParamsError("alpha vector must be nonempty")
    n = len(al)
    labels = ["W"] + [f"X{k}" for k in range(1, n + 1)]
    br = {(0, k): {k: al[k - 1]} for k in range(1, n + 1)}
    name = "g2(alpha=" + ",".join(str(a) for a in al) + ")"
    return _checked(MetricLieAlgebra.from_brackets(n + 1, br, labels, name))


def abelian(n: int = 4) -> MetricLieAlgebra:
    n = _positive_int(n, "n")
    return MetricLieAlgebra.from_brackets(n, {}, name=f"abelian(n={n})")


def so3() -> MetricLieAlgebra:
    """[e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2 (bi-invariant metric)."""
    br = {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}}
    return MetricLieAlgebra.from_brackets(3, br, ("e1", "e2", "e3"), "so3")


def heisenberg3() -> MetricLieAlgebra:
    return MetricLieAlgebra.from_brackets(3, {(0, 1): {2: 1}}, ("X", "Y", "Z"), "heisenberg3")


def _positive_int(n, what: str) -> int:
    try:
        k = int(n)
    except (TypeError, ValueError) as exc:
        raise InvalidParamsError(f"{what} must be an integer, got {n!r}") from exc
    if k < 1:
        raise InvalidParamsError(f"{what} must be >= 1, got {k}")
    return k


def _checked(alg: MetricLieAlgebra) -> MetricLieAlgebra:
    alg.require_valid()
    return alg


def catalog_basis(name: str) -> WedgeBasis:
    """Reference wedge-basis ordering shipped with the catalog."""
    data = json.loads(resources.files("liecurv.data").joinpath(f"{name}_basis.json").read_text("utf-8"))
    return WedgeBasis(len(data["labels"]), tuple(tuple(p) for p in data["pairs"]))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: Callable[..., MetricLieAlgebra]
    params: tuple[str, ...] = ()
    splits: Callable[[MetricLieAlgebra], list[list[str]]] = lambda alg: []
    basis_file: str | None = None
    expected: dict = field(default_factory=dict)

    def build(self, **params) -> MetricLieAlgebra:
        unknown = set(params) - set(self.params)
        if unknown:
            raise InvalidParamsError(f"{self.name} does not take {sorted(unknown)}")
        return self.builder(**params)

    def basis(self) -> WedgeBasis | None:
        return catalog_basis(self.basis_file) if self.basis_file else None


def _tail_split(first: int):
    return lambda alg: [list(alg.labels[first:])]


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in (
        CatalogEntry(
            "nikonorov5",
            nikonorov5,
            splits=lambda alg: [["A", "X2", "X4"], ["X2", "X3", "X4"]],
            basis_file="nikonorov5",
            expected={
                "operator_scale": {"value": "1/30", "source": "reference"},
                "einstein_constant": {"value": "-1", "source": "computed"},
                "gcd_f_df": {"value": "x - 4/15", "source": "reference"},
                "verdict": {"value": "obstructed", "source": "reference"},
                "splits": {
                    "A,X2,X4": {"value": "totally geodesic, not conformal", "source": "reference"},
                    "X2,X3,X4": {"value": "conformal, not minimal", "source": "reference"},
                },
            },
        ),
        CatalogEntry(
            "nikonorov4",
            nikonorov4,
            splits=lambda alg: [["A", "X3", "X4"]],
            basis_file="nikonorov4",
            expected={
                "operator_scale": {"value": "1/66", "source": "reference"},
                "einstein_constant": {"value": "-1", "source": "computed"},
                "gcd_degree": {"value": 3, "source": "computed"},
                "verdict": {"value": "passes", "source": "computed"},
                "splits": {
                    "A,X3,X4": {"value": "conformal, totally geodesic", "source": "reference"},
                },
            },
        ),
        CatalogEntry(
            "g1",
            g1,
            ("n",),
            splits=_tail_split(2),
            expected={
                "ric_W_minus_ric_X1": {"value": "(1-n)/2", "source": "reference"},
                "abs_B_X2X3_W": {"value": "1/2", "source": "reference"},
            },
        ),
        CatalogEntry(
            "g2",
            g2,
            ("alpha",),
            splits=_tail_split(2),
            expected={
                "ric_X1": {"value": "-alpha_1*(alpha_1+...+alpha_n)", "source": "reference"},
                "ric_W": {"value": "-(alpha_1^2+...+alpha_n^2)", "source": "reference"},
            },
        ),
        CatalogEntry("abelian", abelian, ("n",), expected={"flat": {"value": True, "source": "trivial"}}),
        CatalogEntry("so3", so3, splits=lambda alg: [["e3"]]),
        CatalogEntry("heisenberg3", heisenberg3, splits=lambda alg: [["Z"]]),
    )
}


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownEntryError(f"unknown catalog entry {name!r}; known: {sorted(CATALOG)}") from None


def catalog_build(name: str, **params) -> MetricLieAlgebra:
    return catalog_entry(name).build(**params)
