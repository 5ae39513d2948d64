"""Certification of catalog entries against their expected outcomes.

Each catalog entry records what the analyzer must conclude (verdict kind,
homothety factor, block count, ...) plus closed-form quantities like the
in-quadric third-form factor. verify_entry recomputes everything numerically
and emits one pass/fail check per recorded key; verify_catalog aggregates
over the built-in list.
"""

from __future__ import annotations

import numpy as np

from ._version import __version__
from .catalog import CatalogEntry, default_catalog
from .classify import AnalysisConfig, analyze, einstein_certificate, sample_points
from .errors import ThirdFormError
from .geometry import point_data, reduce_to_space_form, third_form_direct
from .linalg import frobenius

__all__ = ["verify_entry", "verify_catalog"]

VERIFY_SCHEMA = "thirdform-verify/1"


def _close(expected: float, actual: float, tol: float) -> bool:
    return abs(actual - expected) <= tol * (1.0 + abs(expected))


def _check(name: str, passed: bool, expected, actual, tol=None) -> dict:
    out = {"name": name, "passed": bool(passed), "expected": expected,
           "actual": actual}
    if tol is not None:
        out["tolerance"] = tol
    return out


def _factor_of(form: np.ndarray) -> tuple[float, float]:
    n = form.shape[0]
    mu = float(np.trace(form)) / n
    return mu, frobenius(form - mu * np.eye(n))


def _space_form_probe(imm, pts):
    """Worst-case in-quadric quantities over a handful of points."""
    factor_lo = np.inf
    factor_hi = -np.inf
    umbilic_worst = 0.0
    h_worst = 0.0
    for u in pts:
        pd = point_data(imm, u)
        sf = reduce_to_space_form(pd, imm)
        mu, resid = _factor_of(third_form_direct(sf))
        factor_lo, factor_hi = min(factor_lo, mu), max(factor_hi, mu)
        umbilic_worst = max(umbilic_worst, resid)
        h_worst = max(h_worst, float(np.sqrt(np.sum(sf.mean_curvature ** 2))))
    return factor_lo, factor_hi, umbilic_worst, h_worst


def _euclidean_probe(imm, pts):
    factor_lo = np.inf
    factor_hi = -np.inf
    umbilic_worst = 0.0
    for u in pts:
        pd = point_data(imm, u)
        mu, resid = _factor_of(third_form_direct(pd))
        factor_lo, factor_hi = min(factor_lo, mu), max(factor_hi, mu)
        umbilic_worst = max(umbilic_worst, resid)
    return factor_lo, factor_hi, umbilic_worst


def verify_entry(entry: CatalogEntry, config: AnalysisConfig | None = None,
                 tol: float = 1e-6) -> dict:
    """Run the analyzer on one entry and check every expected record."""
    config = config or AnalysisConfig()
    imm = entry.immersion
    expected = entry.expected
    checks: list[dict] = []
    result = {
        "entry": entry.name,
        "params": dict(imm.params or {}),
        "checks": checks,
    }

    try:
        verdict, _samples = analyze(imm, config)
    except ThirdFormError as err:
        checks.append(_check("analysis", False,
                             expected.get("kind"), f"{type(err).__name__}: {err}"))
        result["passed"] = False
        return result

    result["kind"] = verdict.kind
    if "kind" in expected:
        checks.append(_check("kind", verdict.kind == expected["kind"],
                             expected["kind"], verdict.kind))
    if "flat" in expected:
        checks.append(_check("flat_normal_bundle",
                             verdict.flat_normal_bundle == expected["flat"],
                             expected["flat"], verdict.flat_normal_bundle))
    if "homothety_r2" in expected:
        actual = verdict.homothety_r2
        ok = actual is not None and _close(expected["homothety_r2"], actual, tol)
        checks.append(_check("homothety_r2", ok, expected["homothety_r2"],
                             actual, tol))
    if "block_count" in expected:
        checks.append(_check("block_count",
                             verdict.block_count == expected["block_count"],
                             expected["block_count"], verdict.block_count))
    if "target_curvature" in expected:
        actual = imm.curvature
        ok = actual is not None and _close(expected["target_curvature"], actual, 1e-12)
        checks.append(_check("target_curvature", ok,
                             expected["target_curvature"], actual, 1e-12))

    probe_keys = ("minimal_in_space_form", "third_form_qc_factor")
    if any(k in expected for k in probe_keys):
        pts = sample_points(imm.domain, min(5, config.samples), config.seed,
                            config.margin)
        lo, hi, umb, h_norm = _space_form_probe(imm, pts)
        if "minimal_in_space_form" in expected:
            minimal = h_norm <= tol
            checks.append(_check("minimal_in_space_form",
                                 minimal == expected["minimal_in_space_form"],
                                 expected["minimal_in_space_form"], minimal, tol))
        if "third_form_qc_factor" in expected:
            want = expected["third_form_qc_factor"]
            ok = (_close(want, lo, tol) and _close(want, hi, tol)
                  and umb <= tol * (1.0 + abs(want)))
            checks.append(_check("third_form_qc_factor", ok, want,
                                 0.5 * (lo + hi), tol))
    if "third_form_euclidean_factor" in expected:
        pts = sample_points(imm.domain, min(5, config.samples), config.seed,
                            config.margin)
        lo, hi, umb = _euclidean_probe(imm, pts)
        want = expected["third_form_euclidean_factor"]
        ok = (_close(want, lo, tol) and _close(want, hi, tol)
              and umb <= tol * (1.0 + abs(want)))
        checks.append(_check("third_form_euclidean_factor", ok, want,
                             0.5 * (lo + hi), tol))
    if "gaussian_curvature" in expected:
        actual = verdict.gaussian_curvature
        if actual is None:
            pts = sample_points(imm.domain, min(3, config.samples), config.seed,
                                config.margin)
            _, _, actual = einstein_certificate(imm, pts, config.ricci_step,
                                                config.tol_curvature)
        ok = _close(expected["gaussian_curvature"], actual, config.tol_curvature)
        checks.append(_check("gaussian_curvature", ok,
                             expected["gaussian_curvature"], actual,
                             config.tol_curvature))

    result["passed"] = all(c["passed"] for c in checks)
    return result


def verify_catalog(entries=None, config: AnalysisConfig | None = None,
                   tol: float = 1e-6, entry_filter: str | None = None) -> dict:
    """Certify the built-in catalog (or a filtered subset)."""
    config = config or AnalysisConfig()
    if entries is None:
        entries = default_catalog()
    if entry_filter:
        entries = [e for e in entries if entry_filter in e.name]
    results = [verify_entry(e, config, tol) for e in entries]
    return {
        "schema": VERIFY_SCHEMA,
        "meta": {
            "version": __version__,
            "samples": config.samples,
            "seed": config.seed,
            "tolerance": tol,
            "tolerances": config.tolerances(),
        },
        "passed": all(r["passed"] for r in results),
        "entries": results,
    }
