"""Pointwise differential geometry of parametrized immersions.

An Immersion is a chart: callbacks for the position, its exact first
partials (Jacobian columns) and exact second partials, plus the ambient
inner product and a box domain. From these we build orthonormal tangent and
normal frames, the second fundamental form, mean curvature, the intrinsic
Ricci tensor by finite differences, and the third fundamental form by two
independent routes: summing squared form values over a tangent frame, and
the mean-curvature-minus-Ricci identity. Immersions into a central quadric
(sphere or hyperboloid) can be reduced to space-form data by splitting off
the radial direction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import (
    DimensionMismatch,
    MissingRicci,
    NotOnQuadric,
    OutOfDomain,
    RankDeficient,
    StepTooLarge,
)
from .linalg import InnerProduct, complete_frame, gram_schmidt

__all__ = [
    "Immersion",
    "PointData",
    "SpaceFormData",
    "point_data",
    "third_form_direct",
    "ricci_intrinsic",
    "third_form_invariant",
    "reduce_to_space_form",
    "gauss_consistency",
]


@dataclass(frozen=True)
class Immersion:
    """A chart-parametrized submanifold with exact derivative callbacks.

    position(u) -> ambient point, jacobian(u) -> (N, n) matrix of first
    partials as columns, hessian(u) -> (N, n, n) array of second partials.
    `curvature` marks immersions whose image lies on the central quadric
    <f, f> = 1/c (sphere for c > 0, hyperboloid in a Lorentz ambient for
    c < 0) and unlocks the space-form reduction.
    """

    n: int
    ambient: InnerProduct
    domain: tuple[tuple[float, float], ...]
    position: Callable[[np.ndarray], np.ndarray]
    jacobian: Callable[[np.ndarray], np.ndarray]
    hessian: Callable[[np.ndarray], np.ndarray]
    curvature: float | None = None
    name: str = ""
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("intrinsic dimension must be positive")
        if len(self.domain) != self.n:
            raise ValueError("domain box must have one interval per chart coordinate")
        for lo, hi in self.domain:
            if not lo < hi:
                raise ValueError(f"empty domain interval ({lo}, {hi})")
        if self.n >= self.ambient.dimension:
            raise ValueError("ambient dimension must exceed intrinsic dimension")

    @property
    def ambient_dim(self) -> int:
        return self.ambient.dimension

    @property
    def codim(self) -> int:
        return self.ambient.dimension - self.n

    def domain_scale(self) -> float:
        return max(hi - lo for lo, hi in self.domain)

    def contains(self, u) -> bool:
        u = np.asarray(u, dtype=float)
        return all(lo <= x <= hi for x, (lo, hi) in zip(u, self.domain))

    def check_point(self, u) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        if u.shape != (self.n,):
            raise DimensionMismatch(f"chart point must have {self.n} coordinates")
        if not self.contains(u):
            raise OutOfDomain(f"point {u.tolist()} is outside the chart box")
        return u


@dataclass(frozen=True)
class PointData:
    """Frames and second fundamental form of an immersion at one point.

    `tangent_frame` and `normal_frame` hold orthonormal vectors as rows;
    `normal_signs` are the self-products (+-1) of the normal vectors, all +1
    in a Euclidean ambient. `alpha[k]` is the symmetric matrix of the second
    fundamental form component along normal k, expressed in the orthonormal
    tangent frame, and `mean_curvature[k]` its trace over n.
    """

    u: np.ndarray
    position: np.ndarray
    metric: np.ndarray
    tangent_frame: np.ndarray
    frame_coords: np.ndarray
    normal_frame: np.ndarray
    normal_signs: np.ndarray
    alpha: np.ndarray
    mean_curvature: np.ndarray
    ambient: InnerProduct

    @property
    def n(self) -> int:
        return self.tangent_frame.shape[0]

    @property
    def codim(self) -> int:
        return self.normal_frame.shape[0]

    @property
    def signs(self) -> np.ndarray:
        return self.normal_signs


@dataclass(frozen=True)
class SpaceFormData:
    """Second fundamental form relative to the space form <f, f> = 1/c.

    The radial direction is removed from the normal frame; the remaining
    normal directions are spacelike, so no signs are needed. `alpha[k]` and
    `mean_curvature[k]` are components along `normal_frame[k]`, and
    `radial_component` is the matrix of the form component along the unit
    radial direction, which must equal -sqrt(|c|) times the identity.
    """

    point: PointData
    c: float
    radial: np.ndarray
    normal_frame: np.ndarray
    alpha: np.ndarray
    mean_curvature: np.ndarray
    radial_component: np.ndarray

    @property
    def n(self) -> int:
        return self.point.n

    @property
    def codim(self) -> int:
        return self.normal_frame.shape[0]

    @property
    def signs(self) -> np.ndarray:
        return np.ones(self.normal_frame.shape[0])


def point_data(imm: Immersion, u) -> PointData:
    """Evaluate frames and the second fundamental form at a chart point.

    The tangent frame comes from Gram-Schmidt on the Jacobian columns; the
    normal frame from pivoted completion with the ambient standard basis, so
    both are deterministic functions of the point. Raises RankDeficient when
    the induced metric is ill-conditioned (condition number above 1e8).
    """
    u = imm.check_point(u)
    pos = np.asarray(imm.position(u), dtype=float)
    jac = np.asarray(imm.jacobian(u), dtype=float)
    hess = np.asarray(imm.hessian(u), dtype=float)
    N, n = imm.ambient_dim, imm.n
    if pos.shape != (N,) or jac.shape != (N, n) or hess.shape != (N, n, n):
        raise DimensionMismatch(
            f"callbacks returned shapes {pos.shape}, {jac.shape}, {hess.shape}; "
            f"expected ({N},), ({N}, {n}), ({N}, {n}, {n})"
        )

    signs = imm.ambient.signs
    metric = jac.T @ (signs[:, None] * jac)
    sv = np.linalg.svd(metric, compute_uv=False)
    if sv[-1] <= 0.0 or sv[0] / sv[-1] > 1e8:
        raise RankDeficient(
            f"induced metric has condition number above 1e8 at {u.tolist()}"
        )

    tangent = gram_schmidt(jac.T, imm.ambient, require_positive=True)
    # Chart coordinates of the frame: T_i = sum_a coords[i, a] d_a f.
    coords = np.linalg.solve(metric.T, ((tangent * signs) @ jac).T).T
    normal, normal_signs = complete_frame(tangent, imm.ambient)

    # alpha^k_ij = <H(T_i, T_j), xi_k>: contract the Hessian through the frame.
    hess_n = np.einsum('kp,p,pab->kab', normal, signs, hess)
    alpha = np.einsum('ia,kab,jb->kij', coords, hess_n, coords)
    alpha = 0.5 * (alpha + np.swapaxes(alpha, 1, 2))
    mean = np.trace(alpha, axis1=1, axis2=2) / n
    return PointData(u, pos, metric, tangent, coords, normal, normal_signs,
                     alpha, mean, imm.ambient)


def third_form_direct(data) -> np.ndarray:
    """Sum of squared form components over the normal frame.

    Accepts PointData or SpaceFormData. A timelike normal direction enters
    with a minus sign (ambient inner product of form values); in Riemannian
    contexts the result is positive semidefinite.
    """
    alpha = data.alpha
    signs = data.signs
    n = alpha.shape[1]
    out = np.zeros((n, n))
    for k in range(alpha.shape[0]):
        out += signs[k] * (alpha[k] @ alpha[k])
    return 0.5 * (out + out.T)


def _metric_at(imm: Immersion, u: np.ndarray) -> np.ndarray:
    jac = np.asarray(imm.jacobian(u), dtype=float)
    return jac.T @ (imm.ambient.signs[:, None] * jac)


def _richardson(coarse: np.ndarray, fine: np.ndarray, scale: float,
                what: str) -> np.ndarray:
    gap = float(np.abs(coarse - fine).max())
    if gap > 1e-4 * scale:
        raise StepTooLarge(
            f"Richardson pair for {what} disagrees by {gap:.3e} "
            f"(limit {1e-4 * scale:.3e}); shrink the step"
        )
    return (4.0 * fine - coarse) / 3.0


def ricci_intrinsic(imm: Immersion, u, step: float | None = None) -> np.ndarray:
    """Intrinsic Ricci tensor in the orthonormal tangent frame.

    Metric derivatives are central differences with Richardson extrapolation
    (steps h and h/2, default h = 1e-4 times the domain scale); Christoffel
    symbols and their derivatives follow from them. Curves return zeros.
    Raises StepTooLarge when a Richardson pair disagrees by more than 1e-4
    relative to the metric scale, OutOfDomain if a stencil point would leave
    the chart box.
    """
    u = imm.check_point(u)
    n = imm.n
    if n == 1:
        return np.zeros((1, 1))
    h = step if step is not None else 1e-4 * imm.domain_scale()
    if h <= 0:
        raise ValueError("step must be positive")
    for x, (lo, hi) in zip(u, imm.domain):
        if x - 2 * h < lo or x + 2 * h > hi:
            raise OutOfDomain(
                f"point {u.tolist()} is within two steps ({2 * h:.3g}) of the chart boundary"
            )

    g0 = _metric_at(imm, u)
    scale = 1.0 + float(np.abs(g0).max())
    eye = np.eye(n)

    def d_metric(a: int, hh: float) -> np.ndarray:
        return (_metric_at(imm, u + hh * eye[a])
                - _metric_at(imm, u - hh * eye[a])) / (2.0 * hh)

    def d2_metric(a: int, b: int, hh: float) -> np.ndarray:
        if a == b:
            return (_metric_at(imm, u + hh * eye[a]) - 2.0 * g0
                    + _metric_at(imm, u - hh * eye[a])) / hh ** 2
        return (_metric_at(imm, u + hh * (eye[a] + eye[b]))
                - _metric_at(imm, u + hh * (eye[a] - eye[b]))
                - _metric_at(imm, u - hh * (eye[a] - eye[b]))
                + _metric_at(imm, u - hh * (eye[a] + eye[b]))) / (4.0 * hh ** 2)

    dg = np.empty((n, n, n))
    for a in range(n):
        dg[a] = _richardson(d_metric(a, h), d_metric(a, h / 2), scale, f"d{a} g")
    d2g = np.empty((n, n, n, n))
    for a in range(n):
        for b in range(a, n):
            d2g[a, b] = _richardson(d2_metric(a, b, h), d2_metric(a, b, h / 2),
                                    scale / h, f"d{a} d{b} g")
            d2g[b, a] = d2g[a, b]

    ginv = np.linalg.inv(g0)
    # bracket[i, j, m] = d_i g_jm + d_j g_im - d_m g_ij
    bracket = dg + dg.transpose(1, 0, 2) - dg.transpose(1, 2, 0)
    gamma = 0.5 * np.einsum('lm,ijm->lij', ginv, bracket)

    dginv = np.array([-ginv @ dg[a] @ ginv for a in range(n)])
    dgamma = np.empty((n, n, n, n))  # [a, l, i, j] = d_a Gamma^l_ij
    for a in range(n):
        dbracket = d2g[a] + d2g[a].transpose(1, 0, 2) - d2g[a].transpose(1, 2, 0)
        dgamma[a] = 0.5 * (np.einsum('lm,ijm->lij', dginv[a], bracket)
                           + np.einsum('lm,ijm->lij', ginv, dbracket))

    # Ric_ij = d_l G^l_ij - d_i G^l_lj + G^l_lm G^m_ij - G^l_im G^m_lj
    ric = (np.einsum('llij->ij', dgamma)
           - np.einsum('illj->ij', dgamma)
           + np.einsum('llm,mij->ij', gamma, gamma)
           - np.einsum('lim,mlj->ij', gamma, gamma))
    ric = 0.5 * (ric + ric.T)

    pd = point_data(imm, u)
    return pd.frame_coords @ ric @ pd.frame_coords.T


def third_form_invariant(data, ricci: np.ndarray | None,
                         c: float = 0.0) -> np.ndarray:
    """Third form from mean curvature and Ricci, without squaring the form.

    In a flat ambient, III = n <alpha(. , .), H> - Ric on the orthonormal
    frame. Relative to a space form of curvature c the Gauss equation
    contributes an extra (n - 1) c I. Pass PointData with c = 0 or
    SpaceFormData (its own curvature wins). Raises MissingRicci without a
    Ricci tensor.
    """
    if ricci is None:
        raise MissingRicci("third_form_invariant needs the intrinsic Ricci tensor")
    if isinstance(data, SpaceFormData):
        c = data.c
    alpha = data.alpha
    signs = data.signs
    mean = data.mean_curvature
    n = alpha.shape[1]
    ricci = np.asarray(ricci, dtype=float)
    if ricci.shape != (n, n):
        raise DimensionMismatch(f"Ricci shape {ricci.shape} does not match n = {n}")
    out = -ricci.copy() + (n - 1) * c * np.eye(n)
    for k in range(alpha.shape[0]):
        out += n * signs[k] * mean[k] * alpha[k]
    return 0.5 * (out + out.T)


def reduce_to_space_form(pd: PointData, imm: Immersion) -> SpaceFormData:
    """Split the radial direction off the normal bundle of a quadric immersion.

    Requires curvature metadata c != 0 and <f, f> = 1/c at the point
    (relative tolerance 1e-10, else NotOnQuadric). The remaining normal
    frame is spacelike and the radial form component is certified to be
    -sqrt(|c|) I.
    """
    c = imm.curvature
    if c is None or c == 0.0:
        raise NotOnQuadric("immersion carries no space-form curvature metadata")
    ip = pd.ambient
    f = pd.position
    norm_sq = ip.norm_sq(f)
    if abs(norm_sq - 1.0 / c) > 1e-10 * (1.0 + abs(1.0 / c)):
        raise NotOnQuadric(
            f"<f, f> = {norm_sq:.12g} but 1/c = {1.0 / c:.12g} at {pd.u.tolist()}"
        )
    radial = np.sqrt(abs(c)) * f
    eps_r = 1.0 if c > 0 else -1.0

    # Project the radial direction out of each ambient normal vector, then
    # pick an orthonormal frame of the remainder by pivoted Gram-Schmidt.
    candidates = [xi - eps_r * ip.dot(xi, radial) * radial for xi in pd.normal_frame]
    frame_rows: list[np.ndarray] = []
    remaining = list(range(len(candidates)))
    for _ in range(pd.codim - 1):
        best_j, best_w, best_q = None, None, 0.0
        for j in remaining:
            w = candidates[j].copy()
            for _ in range(2):
                w = w - eps_r * ip.dot(w, radial) * radial
                for e in frame_rows:
                    w = w - ip.dot(w, e) * e
            q = ip.norm_sq(w)
            if q > best_q:
                best_j, best_w, best_q = j, w, q
        if best_j is None or best_q <= 1e-16:
            raise RankDeficient("cannot build a normal frame inside the space form")
        remaining.remove(best_j)
        frame_rows.append(best_w / np.sqrt(best_q))
    qc_frame = np.array(frame_rows) if frame_rows else np.zeros((0, ip.dimension))

    # Components: alpha_qc[j] = sum_k eps_k <xi_k, eta_j> alpha[k].
    overlaps = (pd.normal_frame * ip.signs) @ qc_frame.T if frame_rows else \
        np.zeros((pd.codim, 0))
    weighted = pd.normal_signs[:, None] * overlaps
    alpha_qc = np.einsum('kj,kab->jab', weighted, pd.alpha)
    radial_overlap = pd.normal_signs * ((pd.normal_frame * ip.signs) @ radial)
    radial_component = np.einsum('k,kab->ab', radial_overlap, pd.alpha)

    expected = -np.sqrt(abs(c)) * np.eye(pd.n)
    defect = float(np.abs(radial_component - expected).max())
    if defect > 1e-8 * (1.0 + np.sqrt(abs(c))):
        raise NotOnQuadric(
            f"radial form component deviates from -sqrt|c| I by {defect:.3e}"
        )
    mean_qc = np.trace(alpha_qc, axis1=1, axis2=2) / pd.n if frame_rows else \
        np.zeros(0)
    return SpaceFormData(pd, float(c), radial, qc_frame, alpha_qc, mean_qc,
                         radial_component)


def gauss_consistency(imm: Immersion, u, step: float | None = None) -> float:
    """Residual between the two third-form routes at a chart point.

    Computes the squared-form sum and the mean-curvature / Ricci expression
    on the same data (space-form data when the immersion carries curvature
    metadata, ambient data otherwise) and returns the Frobenius norm of the
    difference. Small values certify the Gauss equation numerically.
    """
    pd = point_data(imm, u)
    ricci = ricci_intrinsic(imm, u, step)
    if imm.curvature:
        data = reduce_to_space_form(pd, imm)
        direct = third_form_direct(data)
        invariant = third_form_invariant(data, ricci)
    else:
        direct = third_form_direct(pd)
        invariant = third_form_invariant(pd, ricci, 0.0)
    return float(np.linalg.norm(direct - invariant))
