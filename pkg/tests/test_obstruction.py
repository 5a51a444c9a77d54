from __future__ import annotations

from fractions import Fraction

from liecurv.catalog import abelian, g1, heisenberg3, nikonorov4, nikonorov5, so3
from liecurv.obstruction import (
    NOT_APPLICABLE,
    OBSTRUCTED,
    PASSES,
    paired_eigenvalue_test,
    w_block_obstruction,
)
from liecurv.polynomials import ExactPolynomial


def _idx(alg, labels):
    return [alg.index(x) for x in labels]


def test_nikonorov5_is_obstructed():
    res = paired_eigenvalue_test(nikonorov5())
    assert res.verdict == OBSTRUCTED
    assert res.einstein and res.einstein_constant == -1
    assert res.gcd == ExactPolynomial([Fraction(-4, 15), 1])
    assert [m for _, m in res.spectrum].count(2) == 1
    doubled = [x for x, m in res.spectrum if m == 2]
    assert abs(doubled[0] - 4 / 15) < 1e-12


def test_nikonorov4_passes():
    res = paired_eigenvalue_test(nikonorov4())
    assert res.verdict == PASSES and res.gcd_degree == 3 and res.required_degree == 3


def test_not_einstein_is_not_applicable():
    for alg in (g1(2), heisenberg3()):
        res = paired_eigenvalue_test(alg)
        assert res.verdict == NOT_APPLICABLE and res.charpoly is None and not res.einstein


def test_trivial_einstein_cases_pass():
    # so(3): operator is 1/4 on all of the exterior square; flat: operator is zero
    for alg in (so3(), abelian(4)):
        res = paired_eigenvalue_test(alg)
        assert res.verdict == PASSES
        assert res.gcd_degree == alg.n * (alg.n - 1) // 2 - 1


def test_verdict_wording_stays_necessary_only():
    for alg in (nikonorov5(), nikonorov4(), g1(2), so3()):
        assert "exist" not in paired_eigenvalue_test(alg).reason


def test_w_block_on_nikonorov4():
    alg = nikonorov4()
    w = w_block_obstruction(alg, _idx(alg, ["A", "X3", "X4"]))
    assert w.invariant and w.commutes and w.square_identity and w.divides_gcd
    assert w.hermitian_charpoly.degree == 3
    assert w.charpoly == w.hermitian_charpoly * w.hermitian_charpoly
    full = paired_eigenvalue_test(alg)
    assert (full.gcd % w.hermitian_charpoly).is_zero()


def test_w_block_on_nikonorov5_splits():
    alg = nikonorov5()
    bad = w_block_obstruction(alg, _idx(alg, ["X1", "X2", "A"]))
    assert not bad.invariant and bad.charpoly is None
    conf = w_block_obstruction(alg, _idx(alg, ["X2", "X3", "X4"]))
    assert conf.invariant and not conf.commutes
    assert conf.charpoly.degree == 6
