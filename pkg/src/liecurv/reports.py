"""Structured analysis reports.  Values stay exact here; :func:`liecurv.io.to_data`
turns them into strings or floats."""

from __future__ import annotations

from typing import Iterable, Sequence

from .algebra import CONVENTIONS, MetricLieAlgebra, einstein_check
from .complex_structures import (
    AlmostComplexStructure,
    AdaptednessRequiredError,
    CompatibilityRequiredError,
    adapted_check,
    adapted_sampling_integrability,
    compatibility_check,
    dual_b_lemma_check,
    integrability_check,
    superminimal_check,
)
from .foliation import (
    FoliationSplit,
    classify,
    oneill_a,
    oneill_identity_check,
    ricci_condition_check,
    coordinate_subalgebra_scan,
    _sff,
)
from .obstruction import paired_eigenvalue_test, w_block_obstruction
from .wedge import (
    WedgeBasis,
    block_split,
    curvature_operator,
    hermitian_W_check,
    theta_independence_check,
)

__all__ = [
    "ANALYSES",
    "validation_report",
    "curvature_report",
    "ricci_report",
    "einstein_report",
    "operator_report",
    "foliation_report",
    "scan_report",
    "complex_report",
    "obstruction_report",
    "run_report",
    "conventions_report",
]

ANALYSES = ("validate", "curvature", "einstein", "scan", "obstruction")


def _lab(alg: MetricLieAlgebra, idx: Iterable[int]) -> list[str]:
    return [alg.labels[i] for i in idx]


def _vec(alg: MetricLieAlgebra, v) -> dict:
    return {alg.labels[k]: x for k, x in enumerate(v) if x}


def validation_report(alg: MetricLieAlgebra) -> dict:
    rep = alg.validation
    return {
        "algebra": alg.name or None,
        "dim": alg.n,
        "labels": list(alg.labels),
        "valid": rep.valid,
        "issues": [
            {"kind": i.kind, "indices": list(i.indices), "component": i.component, "value": i.value}
            for i in rep.issues
        ],
    }


def ricci_report(alg: MetricLieAlgebra) -> dict:
    return {"labels": list(alg.labels), "ricci": alg.ricci}


def einstein_report(alg: MetricLieAlgebra) -> dict:
    r = einstein_check(alg)
    if r:
        return {"einstein": True, "constant": r.constant}
    return {"einstein": False, "witness": _lab(alg, r.witness)}


def operator_report(alg: MetricLieAlgebra, basis: WedgeBasis | None = None) -> dict:
    q = curvature_operator(alg, basis)
    return {
        "basis": [f"{alg.labels[i]}^{alg.labels[j]}" for i, j in q.basis.pairs],
        "matrix": q.matrix,
    }


def curvature_report(alg: MetricLieAlgebra, basis: WedgeBasis | None = None) -> dict:
    g, R, L = alg.connection, alg.riemann, alg.labels
    n = alg.n
    conn = [
        {"i": L[i], "j": L[j], "k": L[k], "value": g[i][j][k]}
        for i in range(n)
        for j in range(n)
        for k in range(n)
        if g[i][j][k]
    ]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    riem = [
        {"i": L[i], "j": L[j], "k": L[k], "l": L[l], "value": R[i][j][k][l]}
        for a, (i, j) in enumerate(pairs)
        for (k, l) in pairs[a:]
        if R[i][j][k][l]
    ]
    return {
        "connection": conn,
        "riemann": riem,
        "ricci": alg.ricci,
        "operator": operator_report(alg, basis),
    }


def foliation_report(alg: MetricLieAlgebra, vertical: Sequence) -> dict:
    split = FoliationSplit(alg, vertical)
    cls = classify(split)
    out: dict = {
        "vertical": _lab(alg, split.vertical),
        "horizontal": _lab(alg, split.horizontal),
        "flags": cls.flags(),
        "nu": None if cls.nu is None else {alg.labels[k]: v for k, v in cls.nu.items()},
    }
    b = _sff(split)
    out["second_fundamental_form"] = [
        {"U": alg.labels[u], "V": alg.labels[v], "value": _vec(alg, b.table[(u, v)])}
        for u in split.vertical
        for v in split.vertical
        if any(b.table[(u, v)])
    ]
    if cls.conformal:
        a = oneill_a(split)
        out["oneill_a"] = {
            "grad_ln_lambda_vertical": _vec(alg, a.gradient),
            "proposition_i": a.proposition_holds,
        }
    if cls.subalgebra:
        ids = oneill_identity_check(split)
        out["oneill_identities"] = {
            "ii": ids.identity_ii,
            "iii": ids.identity_iii,
            "checked": {"ii": ids.identity_ii_checked, "iii": ids.identity_iii_checked},
        }
    if len(split.horizontal) == 2:
        rc = ricci_condition_check(split)
        out["ricci_condition"] = {
            "holds": rc.holds,
            "ric_xx": rc.ric_xx,
            "ric_yy": rc.ric_yy,
            "ric_xy": rc.ric_xy,
        }
        q = curvature_operator(alg)
        th = theta_independence_check(q, split.vertical)
        out["theta_independence"] = {"holds": th.holds}
        if not th:
            u, v, which = th.witness
            out["theta_independence"]["witness"] = {
                "U": alg.labels[u],
                "V": alg.labels[v],
                "identity": which,
                "values": list(th.values),
            }
        bs = block_split(q, split.vertical)
        out["block_split"] = {"invariant": bs.invariant}
        if bs.invariant:
            h = hermitian_W_check(q, split.vertical)
            out["block_split"]["hermitian_W"] = {
                "commutes": h.commutes,
                "det_R_W": h.det_restricted,
                "det_H": h.det_hermitian,
                "det_identity": h.det_identity_holds if h.commutes else None,
            }
    return out


def scan_report(alg: MetricLieAlgebra) -> dict:
    return {
        "splits": [
            {
                "vertical": _lab(alg, c.vertical),
                "horizontal": _lab(alg, c.horizontal),
                "flags": c.flags(),
                "nu": None if c.nu is None else {alg.labels[k]: v for k, v in c.nu.items()},
            }
            for c in coordinate_subalgebra_scan(alg)
        ]
    }


def complex_report(
    alg: MetricLieAlgebra,
    vertical: Sequence,
    j: AlmostComplexStructure | None = None,
    samples: int | None = None,
    seed: int = 0,
) -> dict:
    split = FoliationSplit(alg, vertical)
    out: dict = {"vertical": _lab(alg, split.vertical), "horizontal": _lab(alg, split.horizontal)}
    if j is not None:
        ad = adapted_check(j, split)
        ic = integrability_check(alg, j)
        out["adapted"] = ad.ok
        out["integrable"] = ic.ok
        if not ic:
            out["nijenhuis_witness"] = {
                "pair": _lab(alg, ic.witness),
                "value": _vec(alg, ic.detail["value"]),
                "failing_pairs": [_lab(alg, p) for p in ic.detail["failing"]],
            }
        if ad:
            if split.is_subalgebra:
                comp = compatibility_check(j, split)
                out["compatible"] = comp.ok
                if comp:
                    out["dual_b_lemma"] = dual_b_lemma_check(j, split).ok
            out["superminimal"] = superminimal_check(j, split).ok
    if samples is not None:
        rep = adapted_sampling_integrability(alg, split, samples, seed)
        out["sampling"] = {
            "samples": rep.samples,
            "seed": rep.seed,
            "integrable": rep.integrable,
            "pair": _lab(alg, rep.pair),
            "reduction_holds": rep.reduction_holds,
            "nonzero": rep.nonzero,
        }
    return out


def obstruction_report(alg: MetricLieAlgebra, vertical: Sequence | None = None) -> dict:
    r = paired_eigenvalue_test(alg)
    out: dict = {
        "einstein": {"einstein": r.einstein, "constant": r.einstein_constant},
        "verdict": r.verdict,
        "reason": r.reason,
    }
    if r.charpoly is not None:
        out["charpoly"] = r.charpoly
        out["gcd"] = r.gcd
        out["gcd_degree"] = r.gcd_degree
        out["required_degree"] = r.required_degree
        out["spectrum"] = [{"value": x, "multiplicity": m} for x, m in r.spectrum]
    if vertical is not None:
        split = FoliationSplit(alg, vertical)
        w = w_block_obstruction(alg, split.vertical)
        out["w_block"] = {
            "vertical": _lab(alg, w.vertical),
            "invariant": w.invariant,
            "commutes": w.commutes,
            "charpoly": w.charpoly,
            "gcd": w.gcd,
            "hermitian_charpoly": w.hermitian_charpoly,
            "square_identity": w.square_identity,
            "hermitian_divides_gcd": w.divides_gcd,
        }
    return out


def conventions_report() -> dict:
    return dict(CONVENTIONS)


def run_report(
    alg: MetricLieAlgebra,
    analyses: Iterable[str] = ANALYSES,
    foliations: Sequence[Sequence] = (),
    basis: WedgeBasis | None = None,
    j: AlmostComplexStructure | None = None,
    samples: int | None = None,
    seed: int = 0,
) -> dict:
    """Pipeline validate -> curvature -> einstein -> scan -> obstruction (+ foliations, complex)."""
    wanted = set(analyses)
    out: dict = {"validation": validation_report(alg)}
    if not alg.validation.valid:
        return out
    if "curvature" in wanted and alg.n >= 2:
        out["curvature"] = curvature_report(alg, basis)
    if "einstein" in wanted and alg.n >= 2:
        out["einstein"] = einstein_report(alg)
    if "scan" in wanted and alg.n >= 3:
        out["scan"] = scan_report(alg)
    if "obstruction" in wanted and alg.n >= 3:
        out["obstruction"] = obstruction_report(alg)
    if foliations:
        out["foliations"] = [foliation_report(alg, v) for v in foliations]
    if (j is not None or samples is not None) and foliations:
        try:
            out["complex"] = complex_report(alg, foliations[0], j, samples, seed)
        except (AdaptednessRequiredError, CompatibilityRequiredError, ValueError) as exc:
            out["complex"] = {"error": str(exc)}
    return out
