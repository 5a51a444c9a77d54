"""Homogeneous foliations by left translates of a coordinate subalgebra.

All tensors are evaluated on left-invariant fields at the identity.  The
vertical and horizontal distributions are spanned by basis vectors, so the
orthogonal projections are constant and commute with taking left-invariant
extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .algebra import MetricLieAlgebra
from .linalg import Vector, add, dot, is_zero_vector, scale, sub
from .scalars import ZERO, Scalar
from .wedge import CodimensionError

__all__ = [
    "FoliationSplit",
    "FoliationError",
    "ConformalityRequiredError",
    "SubalgebraResult",
    "subalgebra_check",
    "SecondFundamentalForm",
    "second_fundamental_form",
    "Classification",
    "classify",
    "lie_derivative_matrix",
    "ONeillA",
    "oneill_a",
    "RicciConditionResult",
    "ricci_condition_check",
    "ONeillIdentityReport",
    "oneill_identity_check",
    "coordinate_subalgebra_scan",
]


class FoliationError(ValueError):
    pass


class ConformalityRequiredError(FoliationError):
    pass


class FoliationSplit:
    """Orthogonal decomposition of the algebra into a vertical and a horizontal index set."""

    def __init__(self, alg: MetricLieAlgebra, vertical: Iterable[int | str]):
        self.alg = alg
        v = sorted({alg.index(x) for x in vertical})
        if not v:
            raise FoliationError("vertical space must be nonempty")
        self.vertical: tuple[int, ...] = tuple(v)
        self.horizontal: tuple[int, ...] = tuple(k for k in range(alg.n) if k not in v)
        if not self.horizontal:
            raise FoliationError("horizontal space must be nonempty")
        self._vset = frozenset(v)

    def __repr__(self) -> str:
        labels = self.alg.labels
        return f"FoliationSplit(V={[labels[i] for i in self.vertical]}, H={[labels[i] for i in self.horizontal]})"

    @property
    def n(self) -> int:
        return self.alg.n

    def require_codim2(self) -> tuple[int, int]:
        if len(self.horizontal) != 2:
            raise CodimensionError(f"horizontal space has dimension {len(self.horizontal)}, expected 2")
        return self.horizontal  # type: ignore[return-value]

    def pv(self, u: Sequence[Scalar]) -> Vector:
        return tuple(x if k in self._vset else ZERO for k, x in enumerate(u))

    def ph(self, u: Sequence[Scalar]) -> Vector:
        return tuple(ZERO if k in self._vset else x for k, x in enumerate(u))

    def e(self, i: int) -> Vector:
        return self.alg.e(i)

    # O'Neill tensors on arbitrary vectors

    def B(self, e: Sequence[Scalar], f: Sequence[Scalar]) -> Vector:
        return self.ph(self.alg.nabla(self.pv(e), self.pv(f)))

    def A(self, e: Sequence[Scalar], f: Sequence[Scalar]) -> Vector:
        return self.pv(self.alg.nabla(self.ph(e), self.ph(f)))

    def A_star(self, x: Sequence[Scalar], f: Sequence[Scalar]) -> Vector:
        """``A*_X F = -H(nabla_X V F)``, adjoint of ``A_X``."""
        return tuple(-c for c in self.ph(self.alg.nabla(self.ph(x), self.pv(f))))

    def B_star(self, u: Sequence[Scalar], f: Sequence[Scalar]) -> Vector:
        """``B*_U F = -V(nabla_U H F)``, adjoint of ``B_U``."""
        return tuple(-c for c in self.pv(self.alg.nabla(self.pv(u), self.ph(f))))

    def nabla_B(self, u, v, w) -> Vector:
        """``(nabla_U B)_V W`` with left-invariant extensions."""
        nab = self.alg.nabla
        return sub(
            sub(nab(u, self.B(v, w)), self.B(nab(u, v), w)),
            self.B(v, nab(u, w)),
        )

    def nabla_A(self, u, x, y) -> Vector:
        nab = self.alg.nabla
        return sub(
            sub(nab(u, self.A(x, y)), self.A(nab(u, x), y)),
            self.A(x, nab(u, y)),
        )

    @cached_property
    def is_subalgebra(self) -> bool:
        return bool(subalgebra_check(self))


@dataclass(frozen=True)
class SubalgebraResult:
    closed: bool
    witness: tuple[int, int, int] | None = None
    value: Scalar | None = None

    def __bool__(self) -> bool:
        return self.closed


def subalgebra_check(split: FoliationSplit) -> SubalgebraResult:
    c = split.alg.c
    for a, u in enumerate(split.vertical):
        for v in split.vertical[a + 1:]:
            for k in split.horizontal:
                if c[u][v][k]:
                    return SubalgebraResult(False, (u, v, k), c[u][v][k])
    return SubalgebraResult(True)


@dataclass(frozen=True)
class SecondFundamentalForm:
    vertical: tuple[int, ...]
    horizontal: tuple[int, ...]
    table: dict  # (U, V) -> horizontal vector (full length)

    def component(self, u: int, v: int, x: int) -> Scalar:
        return self.table[(u, v)][x]

    def is_zero(self) -> bool:
        return all(is_zero_vector(b) for b in self.table.values())

    def is_symmetric(self) -> bool:
        return all(self.table[(u, v)] == self.table[(v, u)] for u in self.vertical for v in self.vertical)

    def mean_curvature(self) -> Vector:
        """Trace over the vertical basis (unnormalized)."""
        out = None
        for u in self.vertical:
            b = self.table[(u, u)]
            out = b if out is None else add(out, b)
        return out  # type: ignore[return-value]


def _sff(split: FoliationSplit) -> SecondFundamentalForm:
    table = {(u, v): split.B(split.e(u), split.e(v)) for u in split.vertical for v in split.vertical}
    return SecondFundamentalForm(split.vertical, split.horizontal, table)


def second_fundamental_form(split: FoliationSplit) -> SecondFundamentalForm:
    """``B_U V = H(nabla_U V)``; requires the vertical space to be a subalgebra."""
    if not split.is_subalgebra:
        raise FoliationError(f"{split} is not a subalgebra")
    return _sff(split)


def lie_derivative_matrix(split: FoliationSplit, v: int) -> tuple[tuple[Scalar, ...], ...]:
    """``(L_V g)(X_a, X_b) = <nabla_{X_a} V, X_b> + <X_a, nabla_{X_b} V>`` on the horizontal basis."""
    alg = split.alg
    ev = alg.e(v)
    cols = [alg.nabla(alg.e(x), ev) for x in split.horizontal]
    h = split.horizontal
    return tuple(tuple(cols[a][h[b]] + cols[b][h[a]] for b in range(len(h))) for a in range(len(h)))


@dataclass(frozen=True)
class Classification:
    vertical: tuple[int, ...]
    horizontal: tuple[int, ...]
    subalgebra: bool
    totally_geodesic: bool
    minimal: bool
    conformal: bool
    nu: dict | None  # vertical index -> Scalar
    riemannian: bool

    def flags(self) -> dict[str, bool]:
        return {
            "subalgebra": self.subalgebra,
            "totally_geodesic": self.totally_geodesic,
            "minimal": self.minimal,
            "conformal": self.conformal,
            "riemannian": self.riemannian,
        }


def conformal_functional(split: FoliationSplit) -> dict | None:
    """``nu(V)`` with ``(L_V g)|_H = 2 nu(V) g|_H``, or ``None`` if some ``V`` fails.

    The factor two matches the usual normalization
    ``nu(V) <X, Y> = -(<[V,X],Y> + <[V,Y],X>) / 2``.
    """
    nu = {}
    for v in split.vertical:
        L = lie_derivative_matrix(split, v)
        d = L[0][0]
        for a in range(len(L)):
            for b in range(len(L)):
                if L[a][b] != (d if a == b else ZERO):
                    return None
        nu[v] = d / 2
    return nu


def classify(split: FoliationSplit) -> Classification:
    b = _sff(split)
    nu = conformal_functional(split)
    return Classification(
        split.vertical,
        split.horizontal,
        split.is_subalgebra,
        b.is_zero(),
        is_zero_vector(b.mean_curvature()),
        nu is not None,
        nu,
        nu is not None and not any(nu.values()),
    )


@dataclass(frozen=True)
class ONeillA:
    horizontal: tuple[int, ...]
    table: dict  # (X, Y) -> vertical vector
    gradient: Vector  # V(grad ln lambda) = A_X X for unit horizontal X
    proposition_holds: bool

    def antisymmetry_defect_matches(self, split: FoliationSplit) -> bool:
        for x in self.horizontal:
            for y in self.horizontal:
                lhs = sub(self.table[(x, y)], self.table[(y, x)])
                if lhs != split.pv(split.alg.bracket(split.e(x), split.e(y))):
                    return False
        return True


def oneill_a(split: FoliationSplit) -> ONeillA:
    """O'Neill ``A`` on the horizontal basis with the check
    ``A_X Y = 1/2 V([X,Y]) + <X,Y> V(grad ln lambda)``."""
    if conformal_functional(split) is None:
        raise ConformalityRequiredError(f"{split} is not conformal")
    h = split.horizontal
    table = {(x, y): split.A(split.e(x), split.e(y)) for x in h for y in h}
    grad = table[(h[0], h[0])]
    ok = True
    for x in h:
        for y in h:
            rhs = scale(Scalar(1) / 2, split.pv(split.alg.bracket(split.e(x), split.e(y))))
            if x == y:
                rhs = add(rhs, grad)
            if table[(x, y)] != rhs:
                ok = False
    return ONeillA(h, table, grad, ok)


@dataclass(frozen=True)
class RicciConditionResult:
    holds: bool
    ric_xx: Scalar
    ric_yy: Scalar
    ric_xy: Scalar

    def __bool__(self) -> bool:
        return self.holds


def ricci_condition_check(split: FoliationSplit) -> RicciConditionResult:
    """``Ric(X,X) = Ric(Y,Y)`` and ``Ric(X,Y) = 0`` on the horizontal basis."""
    x, y = split.require_codim2()
    ric = split.alg.ricci
    xx, yy, xy = ric[x][x], ric[y][y], ric[x][y]
    return RicciConditionResult(xx == yy and not xy, xx, yy, xy)


@dataclass(frozen=True)
class ONeillIdentityReport:
    identity_ii: bool
    identity_ii_checked: int
    identity_iii: bool | None  # None when not applicable (needs conformal + B = 0)
    identity_iii_checked: int
    failures: tuple = ()


def oneill_identity_check(split: FoliationSplit) -> ONeillIdentityReport:
    """Cross-check the submersion curvature formulas against the Riemann tensor.

    (ii)  ``<R(U^V), W^X> = <(nabla_U B)_V W, X> - <(nabla_V B)_U W, X>`` for any
          subalgebra split.
    (iii) for conformal splits with ``B = 0``:
          ``<R(U^X), Y^V> = <(nabla_U A)_X Y, V> + <A*_X U, A*_Y V> - 2 V(ln lambda) <A_X Y, U>``.
    """
    if not split.is_subalgebra:
        raise FoliationError(f"{split} is not a subalgebra")
    alg, e = split.alg, split.e
    R = alg.riemann
    failures = []
    n_ii = 0
    for u in split.vertical:
        for v in split.vertical:
            for w in split.vertical:
                rhs_vec = sub(split.nabla_B(e(u), e(v), e(w)), split.nabla_B(e(v), e(u), e(w)))
                for x in split.horizontal:
                    n_ii += 1
                    if R[u][v][w][x] != rhs_vec[x]:
                        failures.append(("ii", (u, v, w, x), R[u][v][w][x], rhs_vec[x]))
    cls = classify(split)
    n_iii = 0
    iii: bool | None = None
    if cls.conformal and cls.totally_geodesic:
        h0 = e(split.horizontal[0])
        grad = split.A(h0, h0)
        iii = True
        for u in split.vertical:
            for x in split.horizontal:
                for y in split.horizontal:
                    axy = split.A(e(x), e(y))
                    nab_a = split.nabla_A(e(u), e(x), e(y))
                    for v in split.vertical:
                        n_iii += 1
                        rhs = (
                            nab_a[v]
                            + dot(split.A_star(e(x), e(u)), split.A_star(e(y), e(v)))
                            - 2 * grad[v] * axy[u]
                        )
                        if R[u][x][y][v] != rhs:
                            iii = False
                            failures.append(("iii", (u, x, y, v), R[u][x][y][v], rhs))
    return ONeillIdentityReport(
        not any(f[0] == "ii" for f in failures), n_ii, iii, n_iii, tuple(failures)
    )


def coordinate_subalgebra_scan(alg: MetricLieAlgebra) -> list[Classification]:
    """Classify every basis-index subset of size ``n - 2`` (lexicographic order)."""
    if alg.n < 3:
        raise CodimensionError("scan needs dimension >= 3")
    return [classify(FoliationSplit(alg, vs)) for vs in combinations(range(alg.n), alg.n - 2)]
