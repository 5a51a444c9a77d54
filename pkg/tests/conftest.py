from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

import pytest

from liecurv.scalars import Scalar

GOLDENS = Path(__file__).parent / "goldens"

_TOKEN = re.compile(r"^(-?\d*)(?:r(\d+))?$")


def surd_entry(tok: str, denom: int) -> Scalar:
    """``"13"``, ``"-2r5"`` (= -2*sqrt(5)), ``"r22"``; divided by ``denom``."""
    m = _TOKEN.match(tok)
    assert m, tok
    coeff, rad = m.groups()
    if rad is None:
        return Scalar(Fraction(int(coeff), denom))
    k = {"": 1, "-": -1}.get(coeff)
    k = int(coeff) if k is None else k
    return Scalar(Fraction(k, denom), int(rad))


def surd_matrix(text: str, denom: int) -> tuple[tuple[Scalar, ...], ...]:
    return tuple(
        tuple(surd_entry(t, denom) for t in line.split())
        for line in text.strip().splitlines()
    )


# Golden operators (entries times the common denominator) in the shipped wedge orderings.
NIKONOROV5_OPERATOR = surd_matrix(
    """
    13 -2r5 -4r5 0 0 0 0 0 0 0
    -2r5 4 0 0 0 0 0 0 0 0
    -4r5 0 16 0 0 0 0 0 0 0
    0 0 0 8 0 0 0 0 0 0
    0 0 0 0 1 0 0 r5 0 r5
    0 0 0 0 0 9 -3r5 0 -3r5 0
    0 0 0 0 0 -3r5 17 0 5 0
    0 0 0 0 r5 0 0 1 0 5
    0 0 0 0 0 -3r5 5 0 -1 0
    0 0 0 0 r5 0 0 5 0 7
    """,
    30,
)

NIKONOROV4_OPERATOR = surd_matrix(
    """
    41 -4r22 0 0 0 0 0 0 0 0
    -4r22 32 0 0 0 0 0 0 0 0
    0 0 18 0 0 0 0 0 0 0
    0 0 0 24 0 0 0 0 0 0
    0 0 0 0 8 0 0 2r22 0 0
    0 0 0 0 0 8 -2r22 0 0 0
    0 0 0 0 0 -2r22 5 0 0 0
    0 0 0 0 2r22 0 0 5 0 0
    0 0 0 0 0 0 0 0 12 0
    0 0 0 0 0 0 0 0 0 12
    """,
    66,
)


@pytest.fixture(scope="session")
def n5():
    from liecurv.catalog import nikonorov5

    return nikonorov5()


@pytest.fixture(scope="session")
def n4():
    from liecurv.catalog import nikonorov4

    return nikonorov4()


# acceptance summary: one line per criterion after the run

_acceptance: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and item.name.startswith("test_ac"):
        tag = item.name.split("_")[1].upper()
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        if rep.when == "call" or rep.failed:
            prev = _acceptance.get(tag, ("PASS", doc))[0]
            status = "FAIL" if rep.failed or prev == "FAIL" else "PASS"
            _acceptance[tag] = (status, doc)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(_acceptance, key=lambda t: int(t[2:])):
        status, doc = _acceptance[tag]
        terminalreporter.write_line(f"{tag} {status}  {doc}")
