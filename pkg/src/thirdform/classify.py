"""Sampled classification of immersions by their third fundamental form.

The analyzer evaluates the second fundamental form at low-discrepancy chart
points, tests whether the third form is a constant multiple of the metric,
and sorts homothetic cases by the block structure: one block means a round
sphere (constant-curvature curve for n = 1), several flat blocks with equal
principal-normal length mean a product of equal-radius spheres, and the
non-flat surface case with positive ambient curvature, minimality and
Gaussian curvature one third of the ambient's matches the quadratic
sphere-to-sphere surface. Everything else is reported honestly as
NotHomothetic or Inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import forms
from .errors import (
    CodimensionUnsupported,
    SamplingFailed,
    ThirdFormError,
)
from .forms import BilinearForm2
from .geometry import (
    Immersion,
    point_data,
    reduce_to_space_form,
    ricci_intrinsic,
    third_form_direct,
)
from .linalg import commutator_norm, frobenius

__all__ = [
    "KINDS",
    "AnalysisConfig",
    "Verdict",
    "SamplePoint",
    "SampleReport",
    "analyze",
    "decide",
    "flatness_certificate",
    "minimality_certificate",
    "einstein_certificate",
    "sample_points",
]

KINDS = (
    "TotallyGeodesic",
    "RoundSphere",
    "SphereProduct",
    "VeroneseLike",
    "NotHomothetic",
    "Inconclusive",
)

DEFINITE_KINDS = tuple(k for k in KINDS if k != "Inconclusive")


@dataclass(frozen=True)
class AnalysisConfig:
    """Sampling counts, seed and tolerances for one analysis run."""

    samples: int = 25
    seed: int = 0
    tol_cluster: float = 1e-6
    tol_cert: float = 1e-8
    tol_homothety: float = 1e-6
    tol_curvature: float = 1e-5
    margin: float = 0.01
    ricci_step: float | None = None

    def __post_init__(self):
        if self.samples < 1:
            raise SamplingFailed(f"need at least one sample point, got {self.samples}")
        for name in ("tol_cluster", "tol_cert", "tol_homothety", "tol_curvature"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def tolerances(self) -> dict[str, float]:
        return {
            "cluster": self.tol_cluster,
            "certificate": self.tol_cert,
            "homothety": self.tol_homothety,
            "curvature": self.tol_curvature,
        }


@dataclass(frozen=True)
class SamplePoint:
    """Per-point certificate numbers; None where a branch did not run."""

    index: int
    u: tuple[float, ...]
    homothety_mu: float
    homothety_residual: float
    iii_spread: float
    commutator: float
    mean_curvature_norm: float
    block_count: int | None = None
    block_dims: tuple[int, ...] | None = None
    lambda_pairs: tuple[tuple[float, float], ...] | None = None
    eta_norms: tuple[float, ...] | None = None


@dataclass(frozen=True)
class SampleReport:
    """All sampled certificates plus min/max/mean aggregates."""

    points: tuple[SamplePoint, ...]

    def aggregates(self) -> dict[str, dict[str, float]]:
        metrics = {
            "homothety_mu": [p.homothety_mu for p in self.points],
            "homothety_residual": [p.homothety_residual for p in self.points],
            "iii_spread": [p.iii_spread for p in self.points],
            "commutator": [p.commutator for p in self.points],
            "mean_curvature_norm": [p.mean_curvature_norm for p in self.points],
        }
        out = {}
        for name, vals in metrics.items():
            arr = np.asarray(vals, dtype=float)
            out[name] = {"min": float(arr.min()), "max": float(arr.max()),
                         "mean": float(arr.mean())}
        return out


@dataclass(frozen=True)
class Verdict:
    """Outcome of an analysis run.

    `kind` is one of KINDS. Numeric certificates hold worst-case values over
    the sample; fields tied to branches that never ran stay None.
    """

    kind: str
    n: int
    codim: int
    ambient_curvature: float
    homothety_r2: float | None
    max_homothety_residual: float
    flat_normal_bundle: bool
    max_commutator: float
    block_count: int | None
    minimal: bool
    max_mean_curvature: float
    eta_norms: tuple[float, ...] | None = None
    einstein: bool | None = None
    gaussian_curvature: float | None = None
    notes: tuple[str, ...] = ()

    @property
    def definite(self) -> bool:
        return self.kind in DEFINITE_KINDS


def sample_points(domain, count: int, seed: int, margin: float = 0.01) -> np.ndarray:
    """Low-discrepancy points in the margin-shrunk domain box.

    Halton sequence with a seed-derived rotation, deterministic per seed.
    """
    dims = len(domain)
    rng = np.random.default_rng(seed)
    shift = rng.random(dims)
    primes = _first_primes(dims)
    out = np.empty((count, dims))
    for j, p in enumerate(primes):
        seq = forms._halton(count, p, float(shift[j]))
        lo, hi = domain[j]
        pad = margin * (hi - lo)
        out[:, j] = lo + pad + seq * (hi - lo - 2 * pad)
    return out


def _first_primes(k: int) -> list[int]:
    primes, cand = [], 2
    while len(primes) < k:
        if all(cand % p for p in primes):
            primes.append(cand)
        cand += 1
    return primes


def flatness_certificate(ops, tol: float) -> tuple[bool, float]:
    """Max pairwise commutator norm against tol * (1 + product of scales)."""
    ops = list(ops)
    worst = 0.0
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            worst = max(worst, commutator_norm(ops[i], ops[j]))
    scale = 1.0
    if len(ops) >= 2:
        norms = sorted(frobenius(op) for op in ops)
        scale = 1.0 + norms[-1] * norms[-2] if len(norms) >= 2 else 1.0
    return worst <= tol * scale, worst


def minimality_certificate(mean_components, signs, tol: float,
                           alpha_scale: float = 1.0) -> tuple[bool, float]:
    """Norm of the mean curvature vector against tol * (1 + form scale)."""
    mean = np.asarray(mean_components, dtype=float)
    signs = np.asarray(signs, dtype=float)
    norm_sq = float(np.sum(signs * mean * mean))
    norm = float(np.sqrt(abs(norm_sq)))
    return norm <= tol * (1.0 + alpha_scale), norm


def einstein_certificate(imm: Immersion, points, step: float | None = None,
                         tol: float = 1e-5) -> tuple[bool, float, float]:
    """Whether Ric = mu I with one mu across the given points.

    Returns (is_einstein, worst residual, mu). For n = 1 the Ricci tensor
    vanishes identically and the certificate is trivially true.
    """
    mus, worst = [], 0.0
    for u in points:
        ric = ricci_intrinsic(imm, u, step)
        n = ric.shape[0]
        mu = float(np.trace(ric)) / n
        worst = max(worst, frobenius(ric - mu * np.eye(n)))
        mus.append(mu)
    mu_mean = float(np.mean(mus))
    spread = max(abs(m - mu_mean) for m in mus)
    scale = 1.0 + abs(mu_mean)
    ok = worst <= tol * scale and spread <= tol * scale
    return ok, max(worst, spread), mu_mean


def decide(*, homothetic: bool, vanishing: bool, n: int, flat: bool,
           block_count: int | None, equal_eta: bool | None,
           ambient_curvature: float, minimal: bool,
           curvature_ratio_ok: bool | None) -> str:
    """Total decision table from certificates to a verdict kind."""
    if not homothetic:
        return "NotHomothetic"
    if vanishing:
        return "TotallyGeodesic"
    if n == 1:
        return "RoundSphere"
    if flat:
        if block_count == 1:
            return "RoundSphere"
        if block_count is not None and block_count >= 2 and bool(equal_eta):
            return "SphereProduct"
        return "Inconclusive"
    if n == 2 and ambient_curvature > 0 and minimal and bool(curvature_ratio_ok):
        return "VeroneseLike"
    return "Inconclusive"


def _form_context(imm: Immersion, pd):
    """Choose the analyzed form: inside the quadric when codim-2 there.

    Preference order: codimension two relative to the space form, then
    Euclidean codimension two, then any codimension (flat route only, which
    the caller enforces). Returns (alpha, signs, mean, curvature, codim).
    """
    c = imm.curvature
    if c:
        sf = reduce_to_space_form(pd, imm)
        if sf.codim == 2 or not imm.ambient.is_euclidean:
            return sf.alpha, sf.signs, sf.mean_curvature, float(c), sf.codim
    if imm.ambient.is_euclidean:
        return pd.alpha, pd.signs, pd.mean_curvature, 0.0, pd.codim
    raise CodimensionUnsupported(
        "a Lorentz ambient requires space-form curvature metadata"
    )


def analyze(imm: Immersion, config: AnalysisConfig | None = None) -> tuple[Verdict, SampleReport]:
    """Classify an immersion from sampled third-form certificates.

    Requires codimension two (in the quadric for curvature-tagged entries,
    Euclidean otherwise); other codimensions are admitted only when the
    normal bundle is flat, where the principal-normal route applies, and
    raise CodimensionUnsupported otherwise.
    """
    config = config or AnalysisConfig()
    pts = sample_points(imm.domain, config.samples, config.seed, config.margin)

    rows: list[SamplePoint] = []
    contexts = []
    notes: list[str] = []
    codim = None
    ambient_c = 0.0
    for idx, u in enumerate(pts):
        try:
            pd = point_data(imm, u)
            alpha, signs, mean, ambient_c, codim = _form_context(imm, pd)
        except ThirdFormError as err:
            raise SamplingFailed(f"point {idx} at {u.tolist()}: {err}") from err
        n = alpha.shape[1]
        iii = np.zeros((n, n))
        for k in range(alpha.shape[0]):
            iii += signs[k] * (alpha[k] @ alpha[k])
        iii = 0.5 * (iii + iii.T)
        mu = float(np.trace(iii)) / n
        resid = frobenius(iii - mu * np.eye(n))
        evals = np.linalg.eigvalsh(iii)
        _, comm = flatness_certificate(list(alpha), config.tol_cert)
        alpha_scale = max(frobenius(a) for a in alpha) if alpha.shape[0] else 0.0
        _, h_norm = minimality_certificate(mean, signs, config.tol_cert, alpha_scale)
        rows.append(SamplePoint(
            index=idx,
            u=tuple(float(x) for x in u),
            homothety_mu=mu,
            homothety_residual=resid,
            iii_spread=float(evals[-1] - evals[0]),
            commutator=comm,
            mean_curvature_norm=h_norm,
        ))
        contexts.append((u, alpha, signs, mu, resid, comm, alpha_scale))

    n = imm.n
    mus = np.array([c[3] for c in contexts])
    mu_mean = float(mus.mean())
    hom_scale = 1.0 + abs(mu_mean)
    max_resid = max(c[4] for c in contexts)
    pointwise_ok = max_resid <= config.tol_homothety * hom_scale
    spread_ok = float(np.abs(mus - mu_mean).max()) <= config.tol_homothety * hom_scale
    homothetic = pointwise_ok and spread_ok
    vanishing = homothetic and abs(mu_mean) <= config.tol_homothety
    if pointwise_ok and not spread_ok:
        notes.append("third form is pointwise umbilical but the factor drifts "
                     "across the sample")

    alpha_scale_all = max(c[6] for c in contexts)
    comm_scale = 1.0 + alpha_scale_all ** 2
    max_comm = max(c[5] for c in contexts)
    flat = max_comm <= config.tol_cert * comm_scale

    max_h = max(r.mean_curvature_norm for r in rows)
    minimal = max_h <= config.tol_cert * (1.0 + alpha_scale_all)

    if codim != 2 and not flat:
        raise CodimensionUnsupported(
            f"analysis needs codimension two, got {codim} with a non-flat "
            "normal bundle"
        )

    block_count: int | None = None
    eta_norms: tuple[float, ...] | None = None
    equal_eta: bool | None = None
    einstein: bool | None = None
    gaussian: float | None = None
    ratio_ok: bool | None = None

    if homothetic and not vanishing and n >= 2:
        if flat:
            block_count, eta_norms, equal_eta, rows = _flat_route(
                contexts, rows, config, notes)
        elif codim == 2:
            block_count, rows = _decompose_route(contexts, rows, config, notes)
            if n == 2 and ambient_c > 0 and minimal:
                curvature_points = pts[:min(5, len(pts))]
                einstein, worst, ric_mu = einstein_certificate(
                    imm, curvature_points, config.ricci_step, config.tol_curvature)
                gaussian = ric_mu  # for n = 2 the Ricci factor is the Gauss curvature
                ratio_ok = einstein and abs(gaussian - ambient_c / 3.0) <= \
                    config.tol_curvature * (1.0 + abs(ambient_c))

    kind = decide(homothetic=homothetic, vanishing=vanishing, n=n, flat=flat,
                  block_count=block_count, equal_eta=equal_eta,
                  ambient_curvature=ambient_c, minimal=minimal,
                  curvature_ratio_ok=ratio_ok)

    homothety_r2 = None
    if homothetic and not vanishing:
        homothety_r2 = 1.0 / mu_mean
    verdict = Verdict(
        kind=kind,
        n=n,
        codim=int(codim),
        ambient_curvature=float(ambient_c),
        homothety_r2=homothety_r2,
        max_homothety_residual=float(max(max_resid, float(np.abs(mus - mu_mean).max()))),
        flat_normal_bundle=bool(flat),
        max_commutator=float(max_comm),
        block_count=block_count,
        minimal=bool(minimal),
        max_mean_curvature=float(max_h),
        eta_norms=eta_norms,
        einstein=einstein,
        gaussian_curvature=gaussian,
        notes=tuple(notes),
    )
    return verdict, SampleReport(tuple(rows))


def _decompose_route(contexts, rows, config: AnalysisConfig, notes: list[str]):
    """Adapted decomposition at every point; demands one stable block count."""
    counts = set()
    new_rows = []
    for row, (u, alpha, signs, mu, resid, comm, a_scale) in zip(rows, contexts):
        form = BilinearForm2(alpha[0], alpha[1])
        try:
            dec = forms.decompose(form, tol=max(config.tol_cert, config.tol_homothety),
                                  rng_seed=config.seed,
                                  cluster_tol=config.tol_cluster * (1.0 + a_scale ** 2))
        except ThirdFormError as err:
            notes.append(f"decomposition failed at point {row.index}: {err}")
            counts.add(None)
            new_rows.append(row)
            continue
        counts.add(dec.k)
        new_rows.append(SamplePoint(
            index=row.index, u=row.u, homothety_mu=row.homothety_mu,
            homothety_residual=row.homothety_residual, iii_spread=row.iii_spread,
            commutator=row.commutator,
            mean_curvature_norm=row.mean_curvature_norm,
            block_count=dec.k, block_dims=tuple(dec.dims),
            lambda_pairs=tuple(b.lambda_pair for b in dec.blocks),
        ))
    if len(counts) != 1 or None in counts:
        notes.append(f"block count is not constant across the sample: {sorted(map(str, counts))}")
        return None, new_rows
    return counts.pop(), new_rows


def _flat_route(contexts, rows, config: AnalysisConfig, notes: list[str]):
    """Principal normals at every point; block count and norms must agree."""
    counts = set()
    norm_sets = []
    new_rows = []
    equal = True
    for row, (u, alpha, signs, mu, resid, comm, a_scale) in zip(rows, contexts):
        blocks = forms.simultaneous_eigenspaces(
            list(alpha), cluster_tol=config.tol_cluster * (1.0 + a_scale))
        etas = []
        for basis in blocks:
            eta = np.array([float(np.trace(basis.T @ a @ basis)) / basis.shape[1]
                            for a in alpha])
            etas.append(eta)
        norms = sorted(float(np.sqrt(np.sum(signs * e * e))) for e in etas)
        counts.add(len(blocks))
        norm_sets.append(norms)
        spread = norms[-1] - norms[0]
        if spread > config.tol_homothety * (1.0 + norms[-1]):
            equal = False
        new_rows.append(SamplePoint(
            index=row.index, u=row.u, homothety_mu=row.homothety_mu,
            homothety_residual=row.homothety_residual, iii_spread=row.iii_spread,
            commutator=row.commutator,
            mean_curvature_norm=row.mean_curvature_norm,
            block_count=len(blocks),
            block_dims=tuple(b.shape[1] for b in blocks),
            eta_norms=tuple(norms),
        ))
    if len(counts) != 1:
        notes.append(f"principal-normal count varies across the sample: {sorted(counts)}")
        return None, None, None, new_rows
    count = counts.pop()
    rep = tuple(float(np.mean([ns[i] for ns in norm_sets])) for i in range(count))
    return count, rep, equal, new_rows
