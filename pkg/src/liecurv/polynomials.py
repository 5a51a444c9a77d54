"""Univariate polynomials over :class:`Scalar`, exact characteristic polynomials,
gcds, squarefree decomposition and Sturm-sequence real root isolation."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import matmul, trace
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "ExactPolynomial",
    "char_poly",
    "char_poly_coefficients",
    "poly_gcd",
    "squarefree_decomposition",
    "sturm_sequence",
    "isolate_real_roots",
    "real_roots",
    "numeric_spectrum",
    "determinant",
]


class ExactPolynomial:
    """Coefficients in ascending degree; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, Scalar) else Scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "ExactPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "ExactPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Scalar)):
            return self == ExactPolynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "ExactPolynomial":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return ExactPolynomial(
            (a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "ExactPolynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "ExactPolynomial":
        return _as_poly(other) - self

    def __mul__(self, other) -> "ExactPolynomial":
        if isinstance(other, (int, Fraction, Scalar)):
            return ExactPolynomial(c * other for c in self.coeffs)
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExactPolynomial()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ExactPolynomial":
        out = ExactPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "ExactPolynomial") -> tuple["ExactPolynomial", "ExactPolynomial"]:
        other = _as_poly(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.degree
        inv_lead = ONE / other.leading
        q = [ZERO] * max(len(r) - d, 0)
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if not c:
                continue
            t = c * inv_lead
            q[k - d] = t
            for i, b in enumerate(other.coeffs):
                if b:
                    r[k - d + i] = r[k - d + i] - t * b
        return ExactPolynomial(q), ExactPolynomial(r[:d] if d > 0 else ())

    def __floordiv__(self, other) -> "ExactPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "ExactPolynomial":
        return divmod(self, other)[1]

    def derivative(self) -> "ExactPolynomial":
        return ExactPolynomial(c * i for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "ExactPolynomial":
        if not self:
            return self
        lead = self.leading
        if lead == 1:
            return self
        inv = ONE / lead
        return ExactPolynomial(c * inv for c in self.coeffs)

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"ExactPolynomial('{self}')"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if c.is_rational():
                q = c.rational()
                sign = "-" if q < 0 else "+"
                mag = abs(q)
                body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            else:
                sign = "+"
                body = f"({c})*{mono}" if mono else f"({c})"
            if not out:
                out = ("-" if sign == "-" else "") + body
            else:
                out += f" {sign} {body}"
        return out


def _as_poly(p) -> ExactPolynomial:
    if isinstance(p, ExactPolynomial):
        return p
    return ExactPolynomial((p,))


def char_poly_coefficients(m: Sequence[Sequence]) -> list:
    """Faddeev-LeVerrier over any ring supporting ``+``, ``*`` and ``/ int``.

    Returns ``[c_0, ..., c_n]`` with ``c_n = 1`` for ``det(x I - m)``.
    """
    n = len(m)
    if n == 0:
        return [ONE]
    if any(len(row) != n for row in m):
        raise ValueError("characteristic polynomial of a non-square matrix")
    zero = m[0][0] * 0
    one = zero + 1
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    mk = tuple(tuple(zero for _ in range(n)) for _ in range(n))
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        mk = matmul(m, mk)
        mk = tuple(
            tuple(mk[i][j] + (c_prev if i == j else zero) for j in range(n)) for i in range(n)
        )
        am = matmul(m, mk)
        coeffs[n - k] = -trace(am) / k
    return coeffs


def char_poly(m: Sequence[Sequence[Scalar]]) -> ExactPolynomial:
    """Monic ``det(x I - m)``."""
    return ExactPolynomial(char_poly_coefficients(m))


def determinant(m: Sequence[Sequence]):
    n = len(m)
    c0 = char_poly_coefficients(m)[0]
    return c0 if n % 2 == 0 else -c0


def poly_gcd(p: ExactPolynomial, q: ExactPolynomial) -> ExactPolynomial:
    """Monic gcd by the Euclidean algorithm (remainders kept monic)."""
    p, q = _as_poly(p), _as_poly(q)
    if not p and not q:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p.monic(), q.monic()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        a, b = b, (a % b).monic()
    return a.monic()


def squarefree_decomposition(f: ExactPolynomial) -> list[tuple[ExactPolynomial, int]]:
    """Yun's algorithm: ``monic(f) = prod a_i^i`` with squarefree, pairwise coprime ``a_i``.

    Only factors of positive degree are returned.
    """
    f = _as_poly(f).monic()
    if f.degree < 1:
        return []
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = f // a0
    c = df // a0
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if d else b
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def sturm_sequence(p: ExactPolynomial) -> list[ExactPolynomial]:
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(-r)
    return seq


def _sign_at(p: ExactPolynomial, x: Fraction) -> int:
    return p(Scalar(x)).sign()


def _variations(seq: list[ExactPolynomial], x: Fraction) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _root_bound(p: ExactPolynomial) -> Fraction:
    lead = abs(float(p.leading))
    m = max((abs(float(c)) for c in p.coeffs[:-1]), default=0.0)
    # Cauchy bound with slack for float rounding
    return Fraction(math.ceil(1 + m / lead) + 1)


def _split_point(p: ExactPolynomial, lo: Fraction, hi: Fraction) -> Fraction:
    for num, den in ((1, 2), (1, 3), (2, 3), (2, 5), (3, 5), (3, 7), (4, 7)):
        x = lo + (hi - lo) * num / den
        if _sign_at(p, x):
            return x
    raise ArithmeticError("no non-root split point found")  # pragma: no cover


def isolate_real_roots(p: ExactPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(lo, hi)``, each holding exactly one real root of squarefree ``p``.

    Endpoints are never roots, except degenerate intervals ``(r, r)`` for exact rational roots.
    """
    p = _as_poly(p)
    if p.degree < 1:
        return []
    seq = sturm_sequence(p)
    bound = _root_bound(p)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, _variations(seq, -bound), _variations(seq, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        count = vlo - vhi
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        mid = _split_point(p, lo, hi)
        vmid = _variations(seq, mid)
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))
    return sorted(out)


def _refine(p: ExactPolynomial, lo: Fraction, hi: Fraction, tol: float) -> Fraction:
    slo = _sign_at(p, lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = _sign_at(p, mid)
        if s == 0:
            return mid
        if s == slo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def real_roots(p: ExactPolynomial, tol: float = 1e-15) -> list[float]:
    """Real roots of a squarefree polynomial refined to width ``tol``."""
    return [float(_refine(p, lo, hi, Fraction(tol))) for lo, hi in isolate_real_roots(p)]


def numeric_spectrum(m: Sequence[Sequence[Scalar]], tol: float = 1e-15) -> list[tuple[float, int]]:
    """Real eigenvalues with multiplicities from the exact squarefree decomposition."""
    return spectrum_of(char_poly(m), tol)


def spectrum_of(f: ExactPolynomial, tol: float = 1e-15) -> list[tuple[float, int]]:
    out = []
    for factor, mult in squarefree_decomposition(f):
        for r in real_roots(factor, tol):
            out.append((r, mult))
    return sorted(out)
