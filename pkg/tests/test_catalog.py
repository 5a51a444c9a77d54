from __future__ import annotations

from fractions import Fraction

import pytest

from liecurv.algebra import einstein_check
from liecurv.catalog import (
    CATALOG,
    InvalidParamsError,
    UnknownEntryError,
    catalog_build,
    catalog_entry,
    g2,
    catalog_basis,
)
from liecurv.foliation import FoliationSplit, classify


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_every_entry_builds_valid_algebra(name):
    entry = catalog_entry(name)
    alg = entry.build()
    assert alg.validation.valid
    for vertical in entry.splits(alg):
        FoliationSplit(alg, vertical)
    for meta in entry.expected.values():
        assert meta.get("source") in {"reference", "computed", "trivial", None}


def test_shipped_bases_cover_all_pairs():
    for name in ("nikonorov5", "nikonorov4"):
        b = catalog_basis(name)
        assert sorted(b.pairs) == [(i, j) for i in range(5) for j in range(i + 1, 5)]


def test_nikonorov_brackets():
    alg = catalog_build("nikonorov5")
    assert alg.labels == ("X1", "X2", "X3", "X4", "A")
    A, x1, x3 = alg.index("A"), alg.index("X1"), alg.index("X3")
    assert alg.c[A][x3][x3] == 3 * alg.c[A][x1][x1]
    assert einstein_check(catalog_build("nikonorov4")).constant == -1


def test_parameters():
    assert catalog_build("g1", n=3).n == 5
    assert catalog_build("abelian", n=2).n == 2
    assert g2("1,0,-1/2").c[0][3][3] == Fraction(-1, 2)
    assert catalog_build("g2", alpha="2,0").n == 3
    with pytest.raises(InvalidParamsError):
        catalog_build("g1", n=0)
    with pytest.raises(InvalidParamsError):
        catalog_build("g1", n="x")
    with pytest.raises(InvalidParamsError):
        catalog_build("nikonorov5", n=3)
    with pytest.raises(InvalidParamsError):
        g2("1,foo")
    with pytest.raises(InvalidParamsError):
        g2([])
    with pytest.raises(UnknownEntryError):
        catalog_entry("nope")


def test_expected_split_verdicts_match():
    alg = catalog_build("nikonorov5")
    flags = {",".join(v): classify(FoliationSplit(alg, v)) for v in CATALOG["nikonorov5"].splits(alg)}
    assert flags["A,X2,X4"].totally_geodesic and not flags["A,X2,X4"].conformal
    assert flags["X2,X3,X4"].conformal and not flags["X2,X3,X4"].minimal
