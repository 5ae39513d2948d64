"""Report construction and byte-stable rendering.

Reports are plain dicts built with a fixed key order. render_json writes
floats with 17 significant digits, two-space indentation and no other
whitespace variation, so equal inputs produce byte-identical output. No
timestamps, hostnames or other environment data ever enter a report.
"""

from __future__ import annotations

import math

import numpy as np

from . import forms
from ._version import __version__
from .classify import AnalysisConfig, SampleReport, Verdict
from .forms import BilinearForm2, BlockStructure, DegenerateBlock

__all__ = [
    "build_report",
    "build_decompose_report",
    "render_json",
    "render_text",
]

SCHEMA = "thirdform-report/1"
DECOMPOSE_SCHEMA = "thirdform-decompose/1"


def _float_str(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(float(x), ".17g")


def _escape(s: str) -> str:
    out = []
    for ch in s:
        if ch in ('"', "\\"):
            out.append("\\" + ch)
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    return "".join(out)


def render_json(obj, indent: int = 0) -> str:
    """Serialize to JSON with deterministic float formatting.

    Dicts keep their insertion order — builders below fix the key order.
    """
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return f'"{_escape(obj)}"'
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _float_str(float(obj))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        rows = [f'{inner}"{_escape(str(k))}": {render_json(v, indent + 1)}'
                for k, v in obj.items()]
        return "{\n" + ",\n".join(rows) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        items = [render_json(v, indent + 1) for v in list(obj)]
        if not items:
            return "[]"
        if all(len(s) < 24 and "\n" not in s for s in items) and len(items) <= 8:
            return "[" + ", ".join(items) + "]"
        return "[\n" + ",\n".join(inner + s for s in items) + "\n" + pad + "]"
    raise TypeError(f"cannot render {type(obj).__name__} deterministically")


def _meta_dict(config: AnalysisConfig) -> dict:
    return {
        "version": __version__,
        "samples": config.samples,
        "seed": config.seed,
        "margin": config.margin,
        "ricci_step": config.ricci_step,
        "tolerances": config.tolerances(),
    }


def _verdict_dict(v: Verdict, config: AnalysisConfig) -> dict:
    return {
        "kind": v.kind,
        "definite": v.definite,
        "n": v.n,
        "codim": v.codim,
        "ambient_curvature": v.ambient_curvature,
        "homothety": {
            "r2": v.homothety_r2,
            "max_residual": v.max_homothety_residual,
            "tolerance": config.tol_homothety,
        },
        "normal_bundle": {
            "flat": v.flat_normal_bundle,
            "max_commutator": v.max_commutator,
            "tolerance": config.tol_cert,
        },
        "mean_curvature": {
            "minimal": v.minimal,
            "max_norm": v.max_mean_curvature,
            "tolerance": config.tol_cert,
        },
        "block_count": v.block_count,
        "eta_norms": list(v.eta_norms) if v.eta_norms is not None else None,
        "einstein": v.einstein,
        "gaussian_curvature": v.gaussian_curvature,
        "notes": list(v.notes),
    }


def _sample_rows(report: SampleReport) -> list[dict]:
    rows = []
    for p in report.points:
        rows.append({
            "index": p.index,
            "u": list(p.u),
            "homothety_mu": p.homothety_mu,
            "homothety_residual": p.homothety_residual,
            "iii_spread": p.iii_spread,
            "commutator": p.commutator,
            "mean_curvature_norm": p.mean_curvature_norm,
            "block_count": p.block_count,
            "block_dims": list(p.block_dims) if p.block_dims is not None else None,
            "lambda_pairs": [list(pair) for pair in p.lambda_pairs]
            if p.lambda_pairs is not None else None,
            "eta_norms": list(p.eta_norms) if p.eta_norms is not None else None,
        })
    return rows


def build_report(verdict: Verdict, samples: SampleReport, config: AnalysisConfig,
                 entry: str | None = None, params: dict | None = None) -> dict:
    """Full analysis report: configuration, verdict, aggregates, raw rows."""
    return {
        "schema": SCHEMA,
        "entry": entry,
        "params": dict(params or {}),
        "meta": _meta_dict(config),
        "verdict": _verdict_dict(verdict, config),
        "aggregates": samples.aggregates(),
        "samples": _sample_rows(samples),
    }


def _structure_dict(st, tol: float) -> dict:
    if isinstance(st, DegenerateBlock):
        return {
            "type": "degenerate",
            "kernel_direction": list(st.kernel_direction),
            "lambda_perp": st.lambda_perp,
            "plus_dim": st.plus_dim,
            "minus_dim": st.minus_dim,
        }
    assert isinstance(st, BlockStructure)
    return {
        "type": "balanced",
        "lambda1": st.lambda1,
        "rho": st.rho,
        "sigma": st.sigma,
        "lambda2": st.lambda2,
        "half_dim": st.half_dim,
        "certificates": dict(sorted(st.certificates.items())),
        "tolerance": tol,
    }


def build_decompose_report(f: BilinearForm2, tol: float = 1e-8,
                           seed: int = 0) -> dict:
    """Adapted decomposition plus per-block structure for one form.

    Raises NotUmbilicalThirdForm when the third form is not umbilical; the
    callers map that onto their own exit paths.
    """
    dec = forms.decompose(f, tol=tol, rng_seed=seed)
    blocks = []
    for block in dec.blocks:
        basis = block.basis
        entry = {
            "dim": block.dim,
            "lambda_pair": list(block.lambda_pair),
            "basis": [list(row) for row in basis.T],
        }
        if max(block.lambda_pair) <= tol:
            entry["structure"] = {"type": "zero"}
        else:
            restricted = BilinearForm2(basis.T @ f.a1 @ basis,
                                       basis.T @ f.a2 @ basis)
            st = forms.block_structure(restricted, tol=tol)
            entry["structure"] = _structure_dict(st, tol)
            if isinstance(st, BlockStructure):
                checks = forms.umbilical_subforms_check(st, restricted, tol)
                entry["structure"]["subform_residuals"] = dict(sorted(checks.items()))
        blocks.append(entry)
    return {
        "schema": DECOMPOSE_SCHEMA,
        "meta": {"version": __version__, "seed": seed, "tolerance": tol},
        "n": f.n,
        "homothety_r2": dec.homothety_r2,
        "block_count": dec.k,
        "block_dims": list(dec.dims),
        "blocks": blocks,
    }


def render_text(report: dict) -> str:
    """Short human-readable summary of an analysis or decompose report."""
    if report.get("schema") == DECOMPOSE_SCHEMA:
        return _render_decompose_text(report)
    v = report["verdict"]
    lines = []
    if report.get("entry"):
        lines.append(f"entry: {report['entry']}")
        if report["params"]:
            pairs = ", ".join(f"{k}={v_}" for k, v_ in report["params"].items())
            lines.append(f"params: {pairs}")
    tag = "definite" if v["definite"] else "needs more information"
    lines.append(f"kind: {v['kind']} ({tag})")
    lines.append(f"dimension {v['n']}, codimension {v['codim']}, "
                 f"ambient curvature {v['ambient_curvature']:g}")
    hom = v["homothety"]
    if hom["r2"] is not None:
        lines.append(f"homothety: r^2 = {hom['r2']:.12g} "
                     f"(max residual {hom['max_residual']:.3e})")
    else:
        lines.append(f"homothety: none (max residual {hom['max_residual']:.3e})")
    nb = v["normal_bundle"]
    lines.append(("normal bundle: flat" if nb["flat"] else "normal bundle: not flat")
                 + f" (max commutator {nb['max_commutator']:.3e})")
    mc = v["mean_curvature"]
    lines.append(("mean curvature: minimal" if mc["minimal"] else "mean curvature: nonzero")
                 + f" (max norm {mc['max_norm']:.3e})")
    if v["block_count"] is not None:
        lines.append(f"blocks: {v['block_count']}")
    if v["eta_norms"] is not None:
        lines.append("principal normal lengths: "
                     + ", ".join(f"{x:.12g}" for x in v["eta_norms"]))
    if v["gaussian_curvature"] is not None:
        lines.append(f"gaussian curvature: {v['gaussian_curvature']:.12g}"
                     + (" (einstein)" if v["einstein"] else ""))
    for note in v["notes"]:
        lines.append(f"note: {note}")
    lines.append(f"samples: {report['meta']['samples']} "
                 f"(seed {report['meta']['seed']})")
    return "\n".join(lines) + "\n"


def _render_decompose_text(report: dict) -> str:
    lines = [f"dimension: {report['n']}"]
    r2 = report["homothety_r2"]
    lines.append("homothety: r^2 = " + (f"{r2:.12g}" if r2 is not None else "none (zero form)"))
    lines.append(f"blocks: {report['block_count']} with dims "
                 + ", ".join(str(d) for d in report["block_dims"]))
    for i, b in enumerate(report["blocks"]):
        st = b["structure"]
        lam = ", ".join(f"{x:.9g}" for x in b["lambda_pair"])
        if st["type"] == "zero":
            lines.append(f"block {i}: dim {b['dim']}, zero")
        elif st["type"] == "degenerate":
            lines.append(
                f"block {i}: dim {b['dim']}, lambda = ({lam}), degenerate "
                f"(kernel [{st['kernel_direction'][0]:.6g}, "
                f"{st['kernel_direction'][1]:.6g}], "
                f"lambda_perp {st['lambda_perp']:.9g}, "
                f"dims {st['plus_dim']}+/{st['minus_dim']}-)")
        else:
            lines.append(
                f"block {i}: dim {b['dim']}, lambda = ({lam}), balanced "
                f"(lambda1 {st['lambda1']:.9g}, rho {st['rho']:.9g}, "
                f"sigma {st['sigma']:.9g}, half dim {st['half_dim']})")
    return "\n".join(lines) + "\n"
