"""Metric Lie algebras with orthonormal bases and their left-invariant geometry.

Conventions (calibrated against the nikonorov4 and nikonorov5 catalog entries):

* ``[e_i, e_j] = sum_k c[i][j][k] e_k``; the metric is the identity.
* ``gamma[i][j][k]`` is the ``e_k`` component of ``nabla_{e_i} e_j``.
* ``R(X, Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z`` and
  ``riemann[i][j][k][l] = <R(e_i, e_j) e_k, e_l>``.
* ``Ric(Y, Z) = trace(X -> R(X, Y)Z)``, so hyperbolic space has ``Ric < 0``.

With these choices the pairing ``<R(e_i ^ e_j), e_k ^ e_l> = riemann[i][j][k][l]``
reproduces the reference operators of the catalog's Einstein solvmanifolds;
its diagonal is minus the sectional curvature.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, Vector, as_scalar, basis_vector
from .scalars import ZERO, Scalar

__all__ = [
    "MetricLieAlgebra",
    "ValidationIssue",
    "ValidationReport",
    "InvalidAlgebraError",
    "DimensionError",
    "EinsteinResult",
    "validate",
    "koszul_connection",
    "riemann",
    "ricci",
    "einstein_check",
    "CONVENTIONS",
]

CONVENTIONS = {
    "bracket": "[e_i,e_j] = sum_k c^k_ij e_k, orthonormal basis, metric = identity",
    "connection": "nabla_{e_i} e_j = sum_k Gamma^k_ij e_k, "
    "Gamma^k_ij = (c^k_ij - c^i_jk + c^j_ki)/2 (Koszul)",
    "riemann_sign": "R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z",
    "riemann_components": "R_ijkl = <R(e_i,e_j)e_k, e_l>",
    "operator_pairing": "<R(e_i^e_j), e_k^e_l> = R_ijkl "
    "(diagonal entries are minus sectional curvatures)",
    "ricci": "Ric_jk = sum_i R_ijki = trace(X -> R(X,e_j)e_k)",
    "operator_ricci_contraction": "sum_i <R(e_i^e_j), e_i^e_k> = -Ric_jk",
    "lie_derivative_functional": "nu(V) = -(<[V,X],Y> + <[V,Y],X>)/2 on orthonormal "
    "horizontal X=Y, i.e. half of (L_V g)(X,X)",
    "indices": "0-based everywhere; labels are display metadata",
}


class InvalidAlgebraError(ValueError):
    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("invalid Lie algebra: " + "; ".join(map(str, report.issues[:5])))


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class ValidationIssue:
    kind: str  # "antisymmetry" | "jacobi" | "diagonal"
    indices: tuple[int, ...]
    component: int
    value: Scalar

    def __str__(self) -> str:
        return f"{self.kind} violated at {self.indices}, component {self.component}: {self.value}"


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[ValidationIssue, ...]

    @property
    def valid(self) -> bool:
        return not self.issues

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True, eq=False)
class MetricLieAlgebra:
    """Structure constants ``c[i][j][k]`` in an orthonormal basis."""

    n: int
    c: tuple[tuple[Vector, ...], ...]
    labels: tuple[str, ...] = ()
    name: str = ""
    _meta: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i}" for i in range(self.n)))
        if len(self.labels) != self.n:
            raise ValueError(f"{len(self.labels)} labels for dimension {self.n}")

    @classmethod
    def from_brackets(
        cls,
        n: int,
        brackets: Mapping[tuple[int, int], Mapping[int, object]] | Iterable,
        labels: Sequence[str] = (),
        name: str = "",
    ) -> "MetricLieAlgebra":
        """Build from ``{(i, j): {k: coeff}}`` with ``i < j``; antisymmetry is filled in.

        ``brackets`` may also be an iterable of ``(i, j, k, coeff)`` records.
        """
        if n < 0:
            raise DimensionError("dimension must be nonnegative")
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        items: list[tuple[int, int, int, object]] = []
        if isinstance(brackets, Mapping):
            for (i, j), comps in brackets.items():
                for k, v in comps.items():
                    items.append((i, j, k, v))
        else:
            items = [tuple(r) for r in brackets]  # type: ignore[misc]
        for i, j, k, v in items:
            for idx in (i, j, k):
                if not 0 <= idx < n:
                    raise IndexError(f"basis index {idx} out of range for dimension {n}")
            if i == j:
                raise ValueError(f"bracket [e{i}, e{i}] must be zero")
            s = as_scalar(v)
            if i > j:
                i, j, s = j, i, -s
            c[i][j][k] = c[i][j][k] + s
            c[j][i][k] = c[j][i][k] - s
        frozen = tuple(tuple(tuple(row) for row in plane) for plane in c)
        return cls(n, frozen, tuple(labels), name)

    @classmethod
    def abelian(cls, n: int) -> "MetricLieAlgebra":
        return cls.from_brackets(n, {}, name=f"abelian({n})")

    def index(self, key: int | str) -> int:
        if isinstance(key, int):
            if not 0 <= key < self.n:
                raise IndexError(f"basis index {key} out of range")
            return key
        key = key.strip()
        if key in self.labels:
            return self.labels.index(key)
        if key.lstrip("-").isdigit():
            return self.index(int(key))
        raise KeyError(f"unknown basis vector {key!r}; labels are {list(self.labels)}")

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.c[i][j]

    def bracket(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        out = [ZERO] * self.n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b or i == j:
                    continue
                ab = a * b
                for k, ck in enumerate(self.c[i][j]):
                    if ck:
                        out[k] = out[k] + ab * ck
        return tuple(out)

    def nabla(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        """Covariant derivative of the left-invariant extension of ``v`` along ``u``."""
        g = self.connection
        out = [ZERO] * self.n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, gk in enumerate(g[i][j]):
                    if gk:
                        out[k] = out[k] + ab * gk
        return tuple(out)

    def e(self, i: int) -> Vector:
        return basis_vector(self.n, i)

    @cached_property
    def validation(self) -> ValidationReport:
        return _validate(self)

    def require_valid(self) -> None:
        if not self.validation.valid:
            raise InvalidAlgebraError(self.validation)

    @cached_property
    def connection(self) -> tuple[tuple[Vector, ...], ...]:
        self.require_valid()
        n, c = self.n, self.c
        half = Scalar(1) / 2
        return tuple(
            tuple(
                tuple((c[i][j][k] - c[j][k][i] + c[k][i][j]) * half for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        )

    @cached_property
    def riemann(self) -> tuple:
        if self.n < 2:
            raise DimensionError("curvature needs dimension >= 2")
        g, c, n = self.connection, self.c, self.n
        rng = range(n)
        R = [[[[ZERO] * n for _ in rng] for _ in rng] for _ in rng]
        for i in rng:
            for j in range(i + 1, n):
                for k in rng:
                    for l in rng:
                        s = ZERO
                        for m in rng:
                            a = g[j][k][m]
                            if a:
                                b = g[i][m][l]
                                if b:
                                    s = s + a * b
                            a = g[i][k][m]
                            if a:
                                b = g[j][m][l]
                                if b:
                                    s = s - a * b
                            a = c[i][j][m]
                            if a:
                                b = g[m][k][l]
                                if b:
                                    s = s - a * b
                        R[i][j][k][l] = s
                        R[j][i][k][l] = -s
        return tuple(tuple(tuple(tuple(r) for r in p) for p in q) for q in R)

    @cached_property
    def ricci(self) -> Matrix:
        R, n = self.riemann, self.n
        out = []
        for j in range(n):
            row = []
            for k in range(n):
                s = ZERO
                for i in range(n):
                    s = s + R[i][j][k][i]
                row.append(s)
            out.append(tuple(row))
        return tuple(out)


def _validate(alg: MetricLieAlgebra) -> ValidationReport:
    n, c = alg.n, alg.c
    issues: list[ValidationIssue] = []
    for i in range(n):
        for k in range(n):
            if c[i][i][k]:
                issues.append(ValidationIssue("diagonal", (i, i), k, c[i][i][k]))
        for j in range(i + 1, n):
            for k in range(n):
                s = c[i][j][k] + c[j][i][k]
                if s:
                    issues.append(ValidationIssue("antisymmetry", (i, j), k, s))
    # [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(n):
                    s = ZERO
                    for a, b, d in ((i, j, k), (j, k, i), (k, i, j)):
                        for m in range(n):
                            x = c[a][b][m]
                            if x:
                                y = c[m][d][l]
                                if y:
                                    s = s + x * y
                    if s:
                        issues.append(ValidationIssue("jacobi", (i, j, k), l, s))
    return ValidationReport(tuple(issues))


def validate(alg: MetricLieAlgebra) -> ValidationReport:
    return alg.validation


def koszul_connection(alg: MetricLieAlgebra):
    """Christoffel table ``gamma[i][j][k]``; raises :class:`InvalidAlgebraError`."""
    return alg.connection


def riemann(alg: MetricLieAlgebra):
    return alg.riemann


def ricci(alg: MetricLieAlgebra) -> Matrix:
    return alg.ricci


@dataclass(frozen=True)
class EinsteinResult:
    einstein: bool
    constant: Scalar | None = None
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.einstein


def einstein_check(alg: MetricLieAlgebra) -> EinsteinResult:
    """``Ric = c g`` with exact ``c``, or the first index pair where it fails.

    Pairs ``(i, j)``, ``i < j`` are scanned lexicographically; a pair fails if
    ``Ric[i][j] != 0`` or ``Ric[j][j] != Ric[i][i]``.
    """
    ric = alg.ricci
    n = alg.n
    for i in range(n):
        for j in range(i + 1, n):
            if ric[i][j] or ric[j][j] != ric[i][i]:
                return EinsteinResult(False, witness=(i, j))
    return EinsteinResult(True, constant=ric[0][0] if n else ZERO)
