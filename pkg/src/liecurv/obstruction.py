"""Paired-eigenvalue obstruction for harmonic morphisms with totally geodesic
fibers from Einstein manifolds to surfaces.

If such a map exists, the curvature operator splits off the mixed block ``W``
which carries a complex structure commuting with it, so every eigenvalue of
``R|_W`` is doubled and ``deg gcd(f, f') >= dim - 2`` for the characteristic
polynomial ``f``.  A smaller gcd degree rules the map out; a larger one
decides nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import MetricLieAlgebra, einstein_check
from .polynomials import ExactPolynomial, char_poly, poly_gcd, spectrum_of
from .scalars import Scalar
from .wedge import block_split, curvature_operator, hermitian_W_check

__all__ = [
    "ObstructionResult",
    "paired_eigenvalue_test",
    "WBlockResult",
    "w_block_obstruction",
    "OBSTRUCTED",
    "PASSES",
    "NOT_APPLICABLE",
]

OBSTRUCTED = "obstructed"
PASSES = "passes"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class ObstructionResult:
    verdict: str
    reason: str
    einstein: bool
    einstein_constant: Scalar | None
    charpoly: ExactPolynomial | None = None
    gcd: ExactPolynomial | None = None
    required_degree: int = 0
    spectrum: tuple[tuple[float, int], ...] = ()

    @property
    def gcd_degree(self) -> int | None:
        return None if self.gcd is None else self.gcd.degree


def paired_eigenvalue_test(alg: MetricLieAlgebra, tol: float = 1e-15) -> ObstructionResult:
    ein = einstein_check(alg)
    if not ein:
        i, j = ein.witness
        return ObstructionResult(
            NOT_APPLICABLE,
            f"not Einstein: Ricci proportionality fails at ({alg.labels[i]}, {alg.labels[j]})",
            False,
            None,
        )
    q = curvature_operator(alg)
    f = char_poly(q.matrix)
    g = poly_gcd(f, f.derivative())
    need = alg.n - 2
    spectrum = tuple(spectrum_of(f, tol))
    if g.degree < need:
        verdict = OBSTRUCTED
        reason = (
            f"deg gcd(f, f') = {g.degree} < {need}: no submersive harmonic morphism to a surface "
            "with totally geodesic fibers, not even locally"
        )
    else:
        verdict = PASSES
        reason = f"deg gcd(f, f') = {g.degree} >= {need}: necessary condition met (not sufficient)"
    return ObstructionResult(verdict, reason, True, ein.constant, f, g, need, spectrum)


@dataclass(frozen=True)
class WBlockResult:
    vertical: tuple[int, ...]
    invariant: bool
    commutes: bool
    charpoly: ExactPolynomial | None = None  # of R|_W
    gcd: ExactPolynomial | None = None
    hermitian_charpoly: ExactPolynomial | None = None
    square_identity: bool = False  # charpoly == F^2
    divides_gcd: bool = False  # F | gcd(f, f')


def w_block_obstruction(alg: MetricLieAlgebra, vertical: Iterable[int]) -> WBlockResult:
    """Same test restricted to the mixed block of one codimension-two split."""
    q = curvature_operator(alg)
    split = block_split(q, vertical)
    if not split.invariant:
        return WBlockResult(split.vertical, False, False)
    h = hermitian_W_check(q, split.vertical)
    f = h.charpoly_restricted
    g = poly_gcd(f, f.derivative())
    if not h.commutes:
        return WBlockResult(split.vertical, True, False, f, g)
    F = h.charpoly_hermitian
    return WBlockResult(
        split.vertical,
        True,
        True,
        f,
        g,
        F,
        h.square_identity_holds,
        (g % F).is_zero(),
    )
