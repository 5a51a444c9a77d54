"""Small dense vector/matrix helpers over :class:`Scalar` (tuples of tuples)."""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import ONE, ZERO, Scalar

Vector = tuple[Scalar, ...]
Matrix = tuple[tuple[Scalar, ...], ...]


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar(x)


def vector(values: Iterable) -> Vector:
    return tuple(as_scalar(v) for v in values)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vector(r) for r in rows)


def basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def zeros(rows: int, cols: int | None = None) -> Matrix:
    return tuple((ZERO,) * (rows if cols is None else cols) for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(basis_vector(n, i) for i in range(n))


def add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(s, u: Sequence[Scalar]) -> Vector:
    return tuple(s * a for a in u)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    out = ZERO
    for a, b in zip(u, v):
        if a and b:
            out = out + a * b
    return out


def is_zero_vector(u: Sequence[Scalar]) -> bool:
    return not any(u)


def transpose(m: Sequence[Sequence[Scalar]]) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matvec(m: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> Vector:
    return tuple(dot(row, v) for row in m)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]):
    bt = transpose(b)
    return tuple(tuple(_dot_any(row, col) for col in bt) for row in a)


def _dot_any(u, v):
    out = None
    for a, b in zip(u, v):
        if not a or not b:
            continue
        term = a * b
        out = term if out is None else out + term
    if out is None:
        # pick a zero of the right type
        return u[0] * 0 if len(u) else ZERO
    return out


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(s, a):
    return tuple(tuple(s * x for x in r) for r in a)


def is_zero_matrix(a) -> bool:
    return not any(x for r in a for x in r)


def trace(a):
    out = a[0][0] * 0 if a else ZERO
    for i in range(len(a)):
        out = out + a[i][i]
    return out


def submatrix(a, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return tuple(tuple(a[i][j] for j in cols) for i in rows)


def permutation_conjugate(a, perm: Sequence[int]) -> Matrix:
    """``P a P^T`` where row ``r`` of the result is row ``perm[r]`` of ``a``."""
    return tuple(tuple(a[i][j] for j in perm) for i in perm)


def format_matrix(a) -> list[list[str]]:
    return [[str(x) for x in row] for row in a]
