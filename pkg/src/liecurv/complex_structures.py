"""Left-invariant almost complex structures adapted to a codimension-two split."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import MetricLieAlgebra
from .foliation import FoliationError, FoliationSplit
from .linalg import (
    Matrix,
    Vector,
    add,
    dot,
    identity,
    is_zero_vector,
    matmul,
    matrix,
    matvec,
    scale,
    sub,
    transpose,
    zeros,
)
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "AlmostComplexStructure",
    "InvalidComplexStructureError",
    "NoComplexStructureError",
    "AdaptednessRequiredError",
    "CompatibilityRequiredError",
    "CheckResult",
    "adapted_check",
    "nijenhuis",
    "integrability_check",
    "compatibility_check",
    "superminimal_check",
    "dual_b_lemma_check",
    "dual_b_lemma_holds",
    "compatible_form",
    "standard_adapted",
    "random_adapted",
    "rational_rotation",
    "SamplingReport",
    "adapted_sampling_integrability",
]


class InvalidComplexStructureError(ValueError):
    pass


class NoComplexStructureError(ValueError):
    pass


class AdaptednessRequiredError(ValueError):
    pass


class CompatibilityRequiredError(ValueError):
    pass


@dataclass(frozen=True)
class AlmostComplexStructure:
    """Orthogonal ``J`` with ``J^2 = -1``; column ``k`` of ``matrix`` is ``J e_k``."""

    matrix: Matrix

    def __post_init__(self):
        m = matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        n = len(m)
        if any(len(r) != n for r in m):
            raise InvalidComplexStructureError("J must be square")
        if n % 2:
            raise NoComplexStructureError(f"no almost complex structure in odd dimension {n}")
        if matmul(m, m) != tuple(tuple(-x for x in r) for r in identity(n)):
            raise InvalidComplexStructureError("J^2 != -1")
        if transpose(m) != tuple(tuple(-x for x in r) for r in m):
            raise InvalidComplexStructureError("J is not orthogonal (J^T != -J)")

    @property
    def n(self) -> int:
        return len(self.matrix)

    def __call__(self, v: Sequence[Scalar]) -> Vector:
        return matvec(self.matrix, v)

    def __neg__(self) -> "AlmostComplexStructure":
        return AlmostComplexStructure(tuple(tuple(-x for x in r) for r in self.matrix))


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: tuple | None = None
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def _codim2_even(j: AlmostComplexStructure, split: FoliationSplit) -> None:
    if split.n % 2:
        raise NoComplexStructureError(f"dimension {split.n} is odd")
    split.require_codim2()
    if j.n != split.n:
        raise InvalidComplexStructureError(f"J is {j.n}x{j.n}, algebra has dimension {split.n}")


def adapted_check(j: AlmostComplexStructure, split: FoliationSplit) -> CheckResult:
    """``J V ⊆ V`` and ``J H ⊆ H``; witness is ``(k, i)`` with ``J e_k`` leaking into ``e_i``."""
    _codim2_even(j, split)
    vs = set(split.vertical)
    for k in range(j.n):
        col = j(split.e(k))
        for i, x in enumerate(col):
            if x and ((i in vs) != (k in vs)):
                return CheckResult(False, (k, i), {"value": x})
    return CheckResult(True)


def nijenhuis(alg: MetricLieAlgebra, j: AlmostComplexStructure, z: Sequence[Scalar], w: Sequence[Scalar]) -> Vector:
    """``N_J(Z,W) = [Z,W] + J[JZ,W] + J[Z,JW] - [JZ,JW]``."""
    br = alg.bracket
    jz, jw = j(z), j(w)
    return sub(add(add(br(z, w), j(br(jz, w))), j(br(z, jw))), br(jz, jw))


def integrability_check(
    alg: MetricLieAlgebra,
    j: AlmostComplexStructure,
    pairs: Iterable[tuple[int, int]] | None = None,
) -> CheckResult:
    """``N_J = 0`` on basis pairs (all ``a < b`` by default).

    The witness is the first failing pair in the given order; ``detail["failing"]``
    lists every failing pair.
    """
    if pairs is None:
        pairs = ((a, b) for a in range(alg.n) for b in range(a + 1, alg.n))
    failing, first = [], None
    for a, b in pairs:
        nv = nijenhuis(alg, j, alg.e(a), alg.e(b))
        if not is_zero_vector(nv):
            failing.append((a, b))
            if first is None:
                first = nv
    if failing:
        return CheckResult(False, failing[0], {"value": first, "failing": tuple(failing)})
    return CheckResult(True)


def _require_adapted(j, split) -> None:
    if not adapted_check(j, split):
        raise AdaptednessRequiredError("J is not adapted to the split")


def compatibility_check(j: AlmostComplexStructure, split: FoliationSplit) -> CheckResult:
    """``J B_U V = B_{JU} V = B_U JV`` on all vertical basis pairs."""
    _require_adapted(j, split)
    if not split.is_subalgebra:
        raise FoliationError(f"{split} is not a subalgebra")
    e = split.e
    for u in split.vertical:
        for v in split.vertical:
            jb = j(split.B(e(u), e(v)))
            b_ju = split.B(j(e(u)), e(v))
            b_jv = split.B(e(u), j(e(v)))
            if jb != b_ju or jb != b_jv:
                return CheckResult(False, (u, v), {"JB_UV": jb, "B_JU_V": b_ju, "B_U_JV": b_jv})
    return CheckResult(True)


def superminimal_check(j: AlmostComplexStructure, split: FoliationSplit) -> CheckResult:
    """``(nabla_U J) e_k = nabla_U (J e_k) - J(nabla_U e_k) = 0`` for vertical ``U``."""
    _require_adapted(j, split)
    nab = split.alg.nabla
    for u in split.vertical:
        eu = split.e(u)
        for k in range(split.n):
            ek = split.e(k)
            d = sub(nab(eu, j(ek)), j(nab(eu, ek)))
            if not is_zero_vector(d):
                return CheckResult(False, (u, k), {"value": d})
    return CheckResult(True)


def dual_b_lemma_check(j: AlmostComplexStructure, split: FoliationSplit) -> CheckResult:
    """``B*_U JX = -B*_{JU} X = J B*_U X`` with ``B*_U X = -V(nabla_U X)``."""
    if not compatibility_check(j, split):
        raise CompatibilityRequiredError("J is not compatible with the second fundamental form")
    e = split.e
    for u in split.vertical:
        for x in split.horizontal:
            lhs = split.B_star(e(u), j(e(x)))
            mid = tuple(-c for c in split.B_star(j(e(u)), e(x)))
            rhs = j(split.B_star(e(u), e(x)))
            if lhs != mid or mid != rhs:
                return CheckResult(False, (u, x), {"B*_U JX": lhs, "-B*_JU X": mid, "J B*_U X": rhs})
    return CheckResult(True)


BForm = Callable[[Sequence[Scalar], Sequence[Scalar]], Vector]


def _bilinear(table: dict, vertical: Sequence[int], n: int) -> BForm:
    def b(u, v):
        out = (ZERO,) * n
        for a in vertical:
            if not u[a]:
                continue
            for c in vertical:
                if v[c]:
                    out = add(out, scale(u[a] * v[c], table[(a, c)]))
        return out

    return b


def compatible_form(j: AlmostComplexStructure, beta: dict, vertical: Sequence[int]) -> dict:
    """Symmetric vertical-to-horizontal form satisfying ``J B(U,V) = B(JU,V) = B(U,JV)``.

    ``B(U,V) = beta(U,V) - J beta(JU,V) - J beta(U,JV) - beta(JU,JV)`` for symmetric ``beta``.
    """
    n = j.n
    bf = _bilinear(beta, vertical, n)
    e = lambda i: tuple(ONE if k == i else ZERO for k in range(n))  # noqa: E731
    out = {}
    for u in vertical:
        for v in vertical:
            eu, ev = e(u), e(v)
            val = sub(
                sub(sub(bf(eu, ev), j(bf(j(eu), ev))), j(bf(eu, j(ev)))),
                bf(j(eu), j(ev)),
            )
            out[(u, v)] = val
    return out


def dual_b_lemma_holds(
    j: AlmostComplexStructure, table: dict, vertical: Sequence[int], horizontal: Sequence[int]
) -> CheckResult:
    """Lemma check for an abstract form ``B`` with ``B*`` defined by adjunction."""
    n = j.n
    b = _bilinear(table, vertical, n)
    e = lambda i: tuple(ONE if k == i else ZERO for k in range(n))  # noqa: E731

    def b_star(u, x):
        # <B*_U X, V> = <X, B_U V>
        out = [ZERO] * n
        for v in vertical:
            out[v] = dot(x, b(u, e(v)))
        return tuple(out)

    for u in vertical:
        for x in horizontal:
            lhs = b_star(e(u), j(e(x)))
            mid = tuple(-c for c in b_star(j(e(u)), e(x)))
            rhs = j(b_star(e(u), e(x)))
            if lhs != mid or mid != rhs:
                return CheckResult(False, (u, x))
    return CheckResult(True)


def _embed(n: int, blocks: list[tuple[Sequence[int], Matrix]]) -> Matrix:
    m = [list(r) for r in zeros(n)]
    for idx, blk in blocks:
        for a, i in enumerate(idx):
            for b, k in enumerate(idx):
                m[i][k] = blk[a][b]
    return tuple(tuple(r) for r in m)


def _standard_block(m: int, sign: int = 1) -> Matrix:
    # J e_{2a} = sign*e_{2a+1}, J e_{2a+1} = -sign*e_{2a}
    out = [list(r) for r in zeros(m)]
    for a in range(0, m, 2):
        out[a + 1][a] = Scalar(sign)
        out[a][a + 1] = Scalar(-sign)
    return tuple(tuple(r) for r in out)


def standard_adapted(split: FoliationSplit, sign: int = 1, vertical_sign: int = 1) -> AlmostComplexStructure:
    """``J H0 = sign*H1`` and ``J V_{2a} = vertical_sign*V_{2a+1}`` on the sorted vertical basis."""
    if split.n % 2:
        raise NoComplexStructureError(f"dimension {split.n} is odd")
    h = split.require_codim2()
    m = _embed(split.n, [(h, _standard_block(2, sign)), (split.vertical, _standard_block(len(split.vertical), vertical_sign))])
    return AlmostComplexStructure(m)


def rational_rotation(m: int, p: int, q: int, t: Fraction) -> Matrix:
    """Exact rotation in the ``(p, q)`` plane with ``cos = (1-t^2)/(1+t^2)``, ``sin = 2t/(1+t^2)``."""
    c = Scalar((1 - t * t) / (1 + t * t))
    s = Scalar(2 * t / (1 + t * t))
    out = [list(r) for r in identity(m)]
    out[p][p], out[q][q] = c, c
    out[p][q], out[q][p] = -s, s
    return tuple(tuple(r) for r in out)


def _random_orthogonal(m: int, rng: random.Random) -> Matrix:
    o = identity(m)
    for p in range(m):
        for q in range(p + 1, m):
            t = Fraction(rng.randint(-12, 12), rng.randint(1, 12))
            o = matmul(rational_rotation(m, p, q, t), o)
    return o


def random_adapted(split: FoliationSplit, rng: random.Random) -> AlmostComplexStructure:
    """Random orthogonal complex structure on V (conjugated block rotation) plus ``J H0 = ±H1``."""
    if split.n % 2:
        raise NoComplexStructureError(f"dimension {split.n} is odd")
    h = split.require_codim2()
    m = len(split.vertical)
    o = _random_orthogonal(m, rng)
    jv = matmul(matmul(o, _standard_block(m, rng.choice((1, -1)))), transpose(o))
    jh = _standard_block(2, rng.choice((1, -1)))
    return AlmostComplexStructure(_embed(split.n, [(h, jh), (split.vertical, jv)]))


@dataclass(frozen=True)
class SamplingReport:
    samples: int
    seed: int
    integrable: int
    pair: tuple[int, int]  # (first horizontal, last vertical)
    reduction_holds: int  # samples with N_J(W, X) == J[W, JX]
    nonzero: int  # samples with N_J(W, X) != 0
    structures: tuple = ()


def adapted_sampling_integrability(
    alg: MetricLieAlgebra, split: FoliationSplit, samples: int = 100, seed: int = 0, keep: bool = False
) -> SamplingReport:
    """Sample adapted ``J`` exactly; count integrable ones and certify ``N_J(W,X) = J[W,JX]``.

    ``W`` is the first horizontal and ``X`` the last vertical basis vector.
    """
    if alg.n % 2:
        raise NoComplexStructureError(f"dimension {alg.n} is odd")
    split.require_codim2()
    rng = random.Random(seed)
    w_idx, x_idx = split.horizontal[0], split.vertical[-1]
    w, x = alg.e(w_idx), alg.e(x_idx)
    integrable = reduced = nonzero = 0
    kept = []
    for _ in range(samples):
        j = random_adapted(split, rng)
        if integrability_check(alg, j):
            integrable += 1
        nv = nijenhuis(alg, j, w, x)
        if nv == j(alg.bracket(w, j(x))):
            reduced += 1
        if not is_zero_vector(nv):
            nonzero += 1
        if keep:
            kept.append(j)
    return SamplingReport(samples, seed, integrable, (w_idx, x_idx), reduced, nonzero, tuple(kept))
