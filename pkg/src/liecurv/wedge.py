"""Curvature operator on the exterior square, block splits and the
theta-independence test for codimension-two splits."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import DimensionError, MetricLieAlgebra
from .linalg import Matrix, submatrix
from .polynomials import ExactPolynomial, char_poly, char_poly_coefficients, determinant
from .scalars import ComplexScalar, Scalar, ZERO

__all__ = [
    "WedgeBasis",
    "BasisError",
    "CodimensionError",
    "SplitNotInvariantError",
    "CurvatureOperator",
    "curvature_operator",
    "BlockSplit",
    "block_split",
    "ThetaResult",
    "theta_independence_check",
    "HermitianResult",
    "hermitian_W_check",
]


class BasisError(ValueError):
    pass


class CodimensionError(ValueError):
    pass


class SplitNotInvariantError(ValueError):
    pass


@dataclass(frozen=True)
class WedgeBasis:
    """Ordered index pairs ``(i, j)``, ``i < j``, covering every pair exactly once."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(i), int(j)) for i, j in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for i, j in pairs:
            if not (0 <= i < j < self.n):
                raise BasisError(f"pair {(i, j)} is not an ordered pair i<j below {self.n}")
        if len(set(pairs)) != len(pairs):
            raise BasisError("duplicate pair in wedge basis")
        if len(pairs) != self.n * (self.n - 1) // 2:
            raise BasisError(
                f"wedge basis for n={self.n} needs {self.n * (self.n - 1) // 2} pairs, got {len(pairs)}"
            )

    @classmethod
    def lexicographic(cls, n: int) -> "WedgeBasis":
        return cls(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def from_labels(cls, alg: MetricLieAlgebra, pairs: Iterable[Sequence]) -> "WedgeBasis":
        return cls(alg.n, tuple((alg.index(a), alg.index(b)) for a, b in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def position(self, i: int, j: int) -> tuple[int, int]:
        """Position of ``e_i ^ e_j`` in the basis and the orientation sign."""
        if i == j:
            raise BasisError("e_i ^ e_i is zero")
        if i < j:
            return self._index[(i, j)], 1
        return self._index[(j, i)], -1

    @property
    def _index(self) -> dict[tuple[int, int], int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {p: k for k, p in enumerate(self.pairs)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def permutation_from(self, other: "WedgeBasis") -> list[int]:
        """``perm`` with ``self.pairs[r] == other.pairs[perm[r]]``."""
        return [other._index[p] for p in self.pairs]


@dataclass(frozen=True)
class CurvatureOperator:
    matrix: Matrix
    basis: WedgeBasis

    @property
    def n(self) -> int:
        return self.basis.n

    def pair(self, i: int, j: int, k: int, l: int) -> Scalar:
        """``<R(e_i ^ e_j), e_k ^ e_l>`` for arbitrary index orientation."""
        if i == j or k == l:
            return ZERO
        a, s = self.basis.position(i, j)
        b, t = self.basis.position(k, l)
        v = self.matrix[a][b]
        return v if s * t == 1 else -v

    def is_symmetric(self) -> bool:
        m = self.matrix
        return all(m[a][b] == m[b][a] for a in range(len(m)) for b in range(a + 1, len(m)))

    def reorder(self, basis: WedgeBasis) -> "CurvatureOperator":
        perm = basis.permutation_from(self.basis)
        return CurvatureOperator(submatrix(self.matrix, perm, perm), basis)

    def char_poly(self) -> ExactPolynomial:
        return char_poly(self.matrix)


def curvature_operator(alg: MetricLieAlgebra, basis: WedgeBasis | None = None) -> CurvatureOperator:
    if alg.n < 2:
        raise DimensionError("curvature operator needs dimension >= 2")
    if basis is None:
        basis = WedgeBasis.lexicographic(alg.n)
    if basis.n != alg.n:
        raise BasisError(f"wedge basis is for n={basis.n}, algebra has n={alg.n}")
    R = alg.riemann
    rows = tuple(tuple(R[i][j][k][l] for k, l in basis.pairs) for i, j in basis.pairs)
    return CurvatureOperator(rows, basis)


def _horizontal(n: int, vertical: Iterable[int], codim: int | None = 2) -> tuple[list[int], list[int]]:
    v = sorted(set(int(x) for x in vertical))
    if any(not 0 <= x < n for x in v):
        raise IndexError(f"vertical index out of range for n={n}")
    h = [k for k in range(n) if k not in v]
    if codim is not None and len(h) != codim:
        raise CodimensionError(f"horizontal complement has size {len(h)}, expected {codim}")
    return v, h


@dataclass(frozen=True)
class BlockSplit:
    vertical: tuple[int, ...]
    horizontal: tuple[int, ...]
    pure: tuple[int, ...]  # positions in the operator basis
    mixed: tuple[int, ...]
    pure_block: Matrix
    mixed_block: Matrix
    residual: Matrix  # rows: pure, cols: mixed

    @property
    def invariant(self) -> bool:
        return not any(x for row in self.residual for x in row)


def block_split(q: CurvatureOperator, vertical: Iterable[int]) -> BlockSplit:
    v, h = _horizontal(q.n, vertical)
    vs = set(v)
    pure, mixed = [], []
    for pos, (i, j) in enumerate(q.basis.pairs):
        if (i in vs) == (j in vs):
            pure.append(pos)
        else:
            mixed.append(pos)
    return BlockSplit(
        tuple(v),
        tuple(h),
        tuple(pure),
        tuple(mixed),
        submatrix(q.matrix, pure, pure),
        submatrix(q.matrix, mixed, mixed),
        submatrix(q.matrix, pure, mixed),
    )


@dataclass(frozen=True)
class ThetaResult:
    holds: bool
    witness: tuple[int, int, str] | None = None  # (U, V, "a" | "b")
    values: tuple[Scalar, Scalar] | None = None

    def __bool__(self) -> bool:
        return self.holds


def theta_independence_check(q: CurvatureOperator, vertical: Iterable[int]) -> ThetaResult:
    """``<R(X_t ^ U), X_t ^ V>`` independent of ``t`` for ``X_t = cos t X + sin t Y``.

    Expanding in ``t`` this is equivalent to, for all vertical ``U, V``:
    (a) ``<R(X^U), X^V> = <R(Y^U), Y^V>`` and
    (b) ``<R(X^U), Y^V> + <R(Y^U), X^V> = 0``.
    """
    v, (x, y) = _horizontal(q.n, vertical)
    for u in v:
        for w in v:
            a1, a2 = q.pair(x, u, x, w), q.pair(y, u, y, w)
            if a1 != a2:
                return ThetaResult(False, (u, w, "a"), (a1, a2))
            b = q.pair(x, u, y, w) + q.pair(y, u, x, w)
            if b:
                return ThetaResult(False, (u, w, "b"), (b, ZERO))
    return ThetaResult(True)


@dataclass(frozen=True)
class HermitianResult:
    commutes: bool
    restricted: Matrix  # R|_W in the basis (X^U_1..X^U_m, Y^U_1..Y^U_m)
    witness: tuple[int, int] | None = None
    hermitian: tuple[tuple[ComplexScalar, ...], ...] | None = None
    det_restricted: Scalar | None = None
    det_hermitian: Scalar | None = None
    charpoly_restricted: ExactPolynomial | None = None
    charpoly_hermitian: ExactPolynomial | None = None

    @property
    def det_identity_holds(self) -> bool:
        if self.det_hermitian is None:
            return False
        return self.det_restricted == self.det_hermitian * self.det_hermitian

    @property
    def square_identity_holds(self) -> bool:
        if self.charpoly_hermitian is None:
            return False
        return self.charpoly_restricted == self.charpoly_hermitian * self.charpoly_hermitian

    def __bool__(self) -> bool:
        return self.commutes


def hermitian_W_check(q: CurvatureOperator, vertical: Iterable[int]) -> HermitianResult:
    """Does ``R|_W`` commute with ``J(X^U) = Y^U, J(Y^U) = -X^U``?

    With ``R|_W = [[P, S], [S^T, T]]`` in the basis above, commuting means
    ``T = P`` and ``S = -S^T``; then ``H = P - i S`` is Hermitian and represents
    ``R|_W`` as a complex-linear map.
    """
    split = block_split(q, vertical)
    if not split.invariant:
        raise SplitNotInvariantError("mixed block W is not invariant under the curvature operator")
    v = split.vertical
    x, y = split.horizontal
    m = len(v)
    basis = [(x, u) for u in v] + [(y, u) for u in v]
    rw = tuple(tuple(q.pair(a, b, c, d) for c, d in basis) for a, b in basis)
    f_w = char_poly(rw)
    for a in range(m):
        for b in range(m):
            p_ab, t_ab = rw[a][b], rw[m + a][m + b]
            s_ab, s_ba = rw[a][m + b], rw[b][m + a]
            if p_ab != t_ab:
                return HermitianResult(False, rw, (a, b), charpoly_restricted=f_w)
            if s_ab != -s_ba:
                return HermitianResult(False, rw, (a, m + b), charpoly_restricted=f_w)
    h = tuple(tuple(ComplexScalar(rw[a][b], -rw[a][m + b]) for b in range(m)) for a in range(m))
    det_h = determinant(h)
    det_h_real = det_h.re if isinstance(det_h, ComplexScalar) else det_h
    if isinstance(det_h, ComplexScalar) and det_h.im:
        raise ArithmeticError("determinant of a Hermitian matrix came out non-real")  # pragma: no cover
    coeffs = char_poly_coefficients(h)
    f_h = ExactPolynomial(c.re if isinstance(c, ComplexScalar) else c for c in coeffs)
    return HermitianResult(
        True,
        rw,
        None,
        h,
        determinant(rw),
        det_h_real,
        f_w,
        f_h,
    )
