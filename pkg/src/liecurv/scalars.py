"""Exact arithmetic in multi-quadratic extensions of the rationals.

A :class:`Scalar` is a finite sum ``sum q_m * sqrt(m)`` with rational ``q_m``
and square-free natural radicands ``m`` (``m == 1`` is the rational part).
Square roots of distinct square-free integers are linearly independent over
the rationals, so the canonical term map is a unique representation and
equality is structural.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

__all__ = [
    "Scalar",
    "ScalarError",
    "InvalidRadicandError",
    "FieldDegreeError",
    "ScalarParseError",
    "normalize",
    "multiply",
    "invert",
    "to_float",
    "parse_scalar",
    "field_rank",
    "MAX_RADICALS",
    "ComplexScalar",
]

Number = Union[int, Fraction, "Scalar"]

#: Default bound on the number of independent square roots ``invert`` accepts.
MAX_RADICALS = 3


class ScalarError(ArithmeticError):
    pass


class InvalidRadicandError(ScalarError, ValueError):
    pass


class FieldDegreeError(ScalarError):
    pass


class ScalarParseError(ScalarError, ValueError):
    pass


@lru_cache(maxsize=4096)
def _split_square(m: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``m == s*s*r`` and ``r`` square-free."""
    if m < 1:
        raise InvalidRadicandError(f"radicand must be a positive integer, got {m}")
    s, r = 1, 1
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            r *= p
        p += 1 if p == 2 else 2
    return s, r * m


@lru_cache(maxsize=4096)
def _primes(m: int) -> tuple[int, ...]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return tuple(out)


def _mul_radicands(m: int, n: int) -> tuple[int, int]:
    # sqrt(m)*sqrt(n) = g*sqrt(m*n/g^2) for square-free m, n
    g = math.gcd(m, n)
    return g, (m // g) * (n // g)


class Scalar:
    """Immutable element of the Q-span of square roots of square-free naturals."""

    __slots__ = ("_t", "_hash")

    def __init__(self, value: int | Fraction | str | Scalar = 0, radicand: int = 1):
        if isinstance(value, Scalar):
            if radicand != 1:
                value = value * Scalar(1, radicand)
            self._t = value._t
        elif isinstance(value, str):
            self._t = parse_scalar(value)._t
        else:
            q = Fraction(value)
            if radicand < 1:
                raise InvalidRadicandError(f"radicand must be >= 1, got {radicand}")
            if q == 0:
                self._t = {}
            else:
                s, r = _split_square(radicand)
                self._t = {r: q * s}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> Scalar:
        obj = object.__new__(cls)
        obj._t = terms
        obj._hash = None
        return obj

    @classmethod
    def sqrt(cls, q: int | Fraction) -> Scalar:
        """Square root of a nonnegative rational, rationalized."""
        q = Fraction(q)
        if q < 0:
            raise InvalidRadicandError("square root of a negative rational")
        if q == 0:
            return cls()
        # sqrt(a/b) = sqrt(a*b)/b
        return cls(Fraction(1, q.denominator), q.numerator * q.denominator)

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._t)

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._t.items())

    def radicands(self) -> tuple[int, ...]:
        return tuple(sorted(self._t))

    def is_zero(self) -> bool:
        return not self._t

    def is_rational(self) -> bool:
        return not self._t or (len(self._t) == 1 and 1 in self._t)

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ScalarError(f"{self} is not rational")
        return self._t.get(1, Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Number) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for m, q in other._t.items():
            v = t.get(m, 0) + q
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Scalar._raw(t)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar._raw({m: -q for m, q in self._t.items()})

    def __pos__(self) -> Scalar:
        return self

    def __sub__(self, other: Number) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Number) -> Scalar:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Scalar._raw({m: q * other for m, q in self._t.items()})
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(b) == 1 and 1 in b:
            return self * b[1]
        if len(a) == 1 and 1 in a:
            return other * a[1]
        t: dict[int, Fraction] = {}
        for m, p in a.items():
            for n, q in b.items():
                g, r = _mul_radicands(m, n)
                t[r] = t.get(r, 0) + p * q * g
        return Scalar._raw({m: q for m, q in t.items() if q})

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> Scalar:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero scalar")
            return self * (Fraction(1) / other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * invert(other)

    def __rtruediv__(self, other: Number) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * invert(self)

    def __pow__(self, k: int) -> Scalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return invert(self) ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({1: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.rational())
            else:
                self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._t)

    def sign(self) -> int:
        """Exact sign: zero by canonical form, otherwise by interval refinement."""
        if not self._t:
            return 0
        if self.is_rational():
            return 1 if self._t[1] > 0 else -1
        bits = 32
        while True:
            lo, hi = _enclose(self, bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def __lt__(self, other: Number) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Number) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Number) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Number) -> bool:
        return (self - other).sign() >= 0

    def __abs__(self) -> Scalar:
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        return to_float(self)

    def conjugate_at(self, p: int) -> Scalar:
        """Image under the automorphism that flips the sign of sqrt(p), p prime."""
        return Scalar._raw({m: (-q if m % p == 0 else q) for m, q in self._t.items()})

    def __repr__(self) -> str:
        return f"Scalar('{self}')"

    def __str__(self) -> str:
        return format_scalar(self)


def _coerce(x: object) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    return NotImplemented  # type: ignore[return-value]



ZERO = Scalar()
ONE = Scalar(1)


def _enclose(a: Scalar, bits: int) -> tuple[Fraction, Fraction]:
    scale = 1 << bits
    lo = hi = Fraction(0)
    for m, q in a._t.items():
        if m == 1:
            lo += q
            hi += q
            continue
        r = math.isqrt(m * scale * scale)
        s_lo = Fraction(r, scale)
        s_hi = Fraction(r + 1, scale)
        if q > 0:
            lo += q * s_lo
            hi += q * s_hi
        else:
            lo += q * s_hi
            hi += q * s_lo
    return lo, hi


def normalize(raw: Iterable[tuple[int | Fraction, int]]) -> Scalar:
    """Build a canonical scalar from ``(coefficient, radicand)`` pairs."""
    t: dict[int, Fraction] = {}
    for q, m in raw:
        if m == 0:
            raise InvalidRadicandError("zero radicand")
        s, r = _split_square(int(m))
        t[r] = t.get(r, 0) + Fraction(q) * s
    return Scalar._raw({m: q for m, q in t.items() if q})


def multiply(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def field_rank(radicands: Iterable[int]) -> int:
    """Number of independent square roots among ``radicands`` (GF(2) rank)."""
    primes: dict[int, int] = {}
    rows = []
    for m in radicands:
        if m == 1:
            continue
        v = 0
        for p in _primes(m):
            v |= 1 << primes.setdefault(p, len(primes))
        rows.append(v)
    rank = 0
    basis: list[int] = []
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
            rank += 1
    return rank


def invert(a: Scalar, max_radicals: int = MAX_RADICALS) -> Scalar:
    """Exact multiplicative inverse.

    Multiplies by Galois conjugates one generating prime at a time until the
    running product is rational; the accumulated conjugates over that rational
    norm is the inverse.
    """
    if not isinstance(a, Scalar):
        a = Scalar(a)
    if not a._t:
        raise ZeroDivisionError("inverse of zero scalar")
    if a.is_rational():
        return Scalar(1 / a._t[1])
    k = field_rank(a._t)
    if k > max_radicals:
        raise FieldDegreeError(
            f"{a} generates a field of degree 2^{k}, bound is 2^{max_radicals}"
        )
    num, cur = ONE, a
    while not cur.is_rational():
        p = min(min(_primes(m)) for m in cur._t if m != 1)
        c = cur.conjugate_at(p)
        num = num * c
        cur = cur * c
    return num * (1 / cur._t[1])


def to_float(a: Scalar) -> float:
    return math.fsum(float(q) * math.sqrt(m) for m, q in a._t.items())


def format_scalar(a: Scalar) -> str:
    if not a._t:
        return "0"
    parts = []
    for m, q in sorted(a._t.items()):
        body = str(abs(q)) if m == 1 else f"{abs(q)}*sqrt({m})"
        parts.append(("-" if q < 0 else "+", body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for s, body in parts[1:]:
        out += s + body
    return out


_TERM = re.compile(
    r"\s*([+-])?\s*(\d+)(?:\s*/\s*(\d+))?(?:\s*\*\s*sqrt\s*\(\s*(\d+)\s*\))?\s*"
)
_BARE_SQRT = re.compile(r"\s*([+-])?\s*sqrt\s*\(\s*(\d+)\s*\)\s*")


def parse_scalar(text: str) -> Scalar:
    """Parse ``term (('+'|'-') term)*`` with ``term := rational ['*sqrt(' natural ')']``.

    A bare ``sqrt(m)`` term is accepted as shorthand for ``1*sqrt(m)``.
    """
    if isinstance(text, (int, Fraction)):
        return Scalar(text)
    s = str(text).strip()
    if not s:
        raise ScalarParseError("empty scalar")
    pos = 0
    raw: list[tuple[Fraction, int]] = []
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m and m.end() > pos and m.group(2) is not None:
            sign, num, den, rad = m.groups()
            if sign is None and not first:
                raise ScalarParseError(f"missing operator in {text!r} at {pos}")
            if den is not None and int(den) == 0:
                raise ScalarParseError(f"zero denominator in {text!r}")
            q = Fraction(int(num), int(den) if den else 1)
            if sign == "-":
                q = -q
            radicand = int(rad) if rad else 1
            if radicand == 0:
                raise InvalidRadicandError(f"zero radicand in {text!r}")
            raw.append((q, radicand))
            pos = m.end()
        else:
            b = _BARE_SQRT.match(s, pos)
            if not b or b.end() == pos:
                raise ScalarParseError(f"cannot parse scalar {text!r} at position {pos}")
            sign, rad = b.groups()
            if sign is None and not first:
                raise ScalarParseError(f"missing operator in {text!r} at {pos}")
            raw.append((Fraction(-1 if sign == "-" else 1), int(rad)))
            pos = b.end()
        first = False
    return normalize(raw)


class ComplexScalar:
    """``re + i*im`` with :class:`Scalar` parts; enough ring structure for determinants."""

    __slots__ = ("re", "im")

    def __init__(self, re: Number = 0, im: Number = 0):
        self.re = re if isinstance(re, Scalar) else Scalar(re)
        self.im = im if isinstance(im, Scalar) else Scalar(im)

    @staticmethod
    def _c(x) -> "ComplexScalar":
        if isinstance(x, ComplexScalar):
            return x
        return ComplexScalar(x, 0)

    def __add__(self, other) -> "ComplexScalar":
        o = self._c(other)
        return ComplexScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "ComplexScalar":
        return ComplexScalar(-self.re, -self.im)

    def __sub__(self, other) -> "ComplexScalar":
        return self + (-self._c(other))

    def __rsub__(self, other) -> "ComplexScalar":
        return self._c(other) - self

    def __mul__(self, other) -> "ComplexScalar":
        if isinstance(other, (int, Fraction, Scalar)):
            return ComplexScalar(self.re * other, self.im * other)
        if not isinstance(other, ComplexScalar):
            return NotImplemented
        return ComplexScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ComplexScalar":
        if isinstance(other, (int, Fraction, Scalar)):
            return ComplexScalar(self.re / other, self.im / other)
        return NotImplemented

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Scalar)):
            other = ComplexScalar(other)
        if not isinstance(other, ComplexScalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        return f"({self.re})+i*({self.im})"

    __repr__ = __str__
