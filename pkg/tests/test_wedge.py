from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import NIKONOROV4_OPERATOR, NIKONOROV5_OPERATOR
from liecurv.catalog import abelian, g1, g2, nikonorov4, nikonorov5, catalog_basis, so3
from liecurv.linalg import matmul, submatrix, transpose, zeros
from liecurv.polynomials import ExactPolynomial, char_poly
from liecurv.scalars import Scalar
from liecurv.wedge import (
    BasisError,
    CodimensionError,
    SplitNotInvariantError,
    WedgeBasis,
    block_split,
    curvature_operator,
    hermitian_W_check,
    theta_independence_check,
)

ALGEBRAS = [nikonorov5(), nikonorov4(), g1(2), g1(3), g2([1, 2]), so3(), abelian(4)]


def _idx(alg, labels):
    return [alg.index(x) for x in labels]


def test_golden_operators():
    q5 = curvature_operator(nikonorov5(), catalog_basis("nikonorov5"))
    q4 = curvature_operator(nikonorov4(), catalog_basis("nikonorov4"))
    assert q5.matrix == NIKONOROV5_OPERATOR
    assert q4.matrix == NIKONOROV4_OPERATOR


def test_shipped_orderings_match_reference_labels():
    alg = nikonorov5()
    labels = [(alg.labels[i], alg.labels[j]) for i, j in catalog_basis("nikonorov5").pairs]
    assert labels[:4] == [("X1", "X3"), ("X2", "A"), ("X4", "A"), ("X2", "X4")]


def test_abelian_operator_is_zero():
    q = curvature_operator(abelian(4))
    assert q.matrix == zeros(6)


@pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
def test_operator_symmetric_and_contracts_to_ricci(alg):
    q = curvature_operator(alg)
    assert q.is_symmetric()
    n = alg.n
    for j in range(n):
        for k in range(n):
            s = sum((q.pair(i, j, i, k) for i in range(n)), Scalar(0))
            assert s == -alg.ricci[j][k]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ALGEBRAS[:4]), st.randoms(use_true_random=False))
def test_permutation_covariance(alg, rnd):
    lex = WedgeBasis.lexicographic(alg.n)
    pairs = list(lex.pairs)
    rnd.shuffle(pairs)
    basis = WedgeBasis(alg.n, pairs)
    m = len(pairs)
    p = [[Scalar(0)] * m for _ in range(m)]
    for r, c in enumerate(basis.permutation_from(lex)):
        p[r][c] = Scalar(1)
    q = curvature_operator(alg, lex).matrix
    expected = matmul(matmul(p, q), transpose(p))
    assert curvature_operator(alg, basis).matrix == expected
    assert curvature_operator(alg, lex).reorder(basis).matrix == expected


def test_basis_validation():
    with pytest.raises(BasisError):
        WedgeBasis(3, [(0, 1), (0, 2)])
    with pytest.raises(BasisError):
        WedgeBasis(3, [(0, 1), (0, 1), (1, 2)])
    with pytest.raises(BasisError):
        WedgeBasis(3, [(1, 0), (0, 2), (1, 2)])
    with pytest.raises(BasisError):
        curvature_operator(nikonorov5(), WedgeBasis.lexicographic(4))
    with pytest.raises(KeyError):
        WedgeBasis.from_labels(nikonorov5(), [("X1", "Q")])


def test_block_split_examples():
    n4 = nikonorov4()
    q = curvature_operator(n4, catalog_basis("nikonorov4"))
    bs = block_split(q, _idx(n4, ["A", "X3", "X4"]))
    assert bs.invariant
    assert bs.mixed == (4, 5, 6, 7, 8, 9)
    assert bs.mixed_block == submatrix(NIKONOROV4_OPERATOR, range(4, 10), range(4, 10))

    n5 = nikonorov5()
    assert block_split(curvature_operator(n5), _idx(n5, ["X2", "X3", "X4"])).invariant

    a = abelian(4)
    bs = block_split(curvature_operator(a), [0, 1])
    assert not any(x for blk in (bs.pure_block, bs.mixed_block, bs.residual) for r in blk for x in r)

    with pytest.raises(CodimensionError):
        block_split(curvature_operator(a), [0])


def test_theta_examples():
    n4 = nikonorov4()
    assert theta_independence_check(curvature_operator(n4), _idx(n4, ["A", "X3", "X4"]))
    n5 = nikonorov5()
    th = theta_independence_check(curvature_operator(n5), _idx(n5, ["X2", "X3", "X4"]))
    assert not th
    u, v, which = th.witness
    assert n5.labels[u] == n5.labels[v] == "X2" and which == "a"
    # <R(A^X2), A^X2> = 4/30 against <R(X1^X2), X1^X2> = 17/30
    assert set(th.values) == {Scalar(Fraction(4, 30)), Scalar(Fraction(17, 30))}
    assert theta_independence_check(curvature_operator(abelian(4)), [2, 3])


def test_hermitian_examples():
    n4 = nikonorov4()
    h = hermitian_W_check(curvature_operator(n4), _idx(n4, ["A", "X3", "X4"]))
    assert h.commutes and h.det_identity_holds and h.square_identity_holds
    assert h.det_restricted == Fraction(64, 15944049)
    assert h.det_hermitian == Fraction(-8, 3993)
    assert h.charpoly_hermitian == ExactPolynomial(
        [Fraction(8, 3993), Fraction(3, 121), Fraction(-25, 66), 1]
    )
    for a, row in enumerate(h.hermitian):
        for b, z in enumerate(row):
            assert z == h.hermitian[b][a].conjugate()

    assert hermitian_W_check(curvature_operator(abelian(4)), [2, 3]).commutes


def test_hermitian_requires_invariant_split():
    n5 = nikonorov5()
    q = curvature_operator(n5)
    vertical = _idx(n5, ["X1", "X2", "A"])
    assert not block_split(q, vertical).invariant
    with pytest.raises(SplitNotInvariantError):
        hermitian_W_check(q, vertical)


def test_mixed_subblock_characteristic_polynomial():
    blk = tuple(
        tuple(Scalar(Fraction(a, 66), r) for a, r in row)
        for row in (((8, 1), (2, 22)), ((2, 22), (5, 1)))
    )
    assert char_poly(blk) == ExactPolynomial([Fraction(-48, 4356), Fraction(-13, 66), 1])
