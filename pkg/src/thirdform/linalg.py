"""Dense linear algebra with signature-aware inner products.

Everything here operates on plain numpy arrays at desk scale (dimension well
below a hundred): orthonormalization against a Euclidean or Lorentz inner
product, symmetric eigendecomposition with tolerance-based eigenvalue
clustering, and commutator norms used as flatness certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NullVector, RankDeficient

__all__ = [
    "InnerProduct",
    "EigenCluster",
    "EigenClustering",
    "gram_schmidt",
    "complete_frame",
    "eig_sym",
    "commutator_norm",
    "default_cluster_tol",
    "require_symmetric",
    "frobenius",
]


def frobenius(m) -> float:
    return float(np.linalg.norm(np.asarray(m, dtype=float)))


def require_symmetric(m, what: str = "operator") -> np.ndarray:
    """Validate symmetry (defect at most 1e-12 * max|M|) and symmetrize.

    Raises ValueError on malformed input; precondition violations here are
    caller bugs, not domain failures.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{what} must be a square matrix, got shape {m.shape}")
    scale = float(np.abs(m).max()) if m.size else 0.0
    defect = float(np.abs(m - m.T).max()) if m.size else 0.0
    if defect > 1e-12 * max(scale, 1e-300):
        raise ValueError(f"{what} is not symmetric: defect {defect:.3e} vs scale {scale:.3e}")
    return 0.5 * (m + m.T)


@dataclass(frozen=True)
class InnerProduct:
    """Non-degenerate inner product on R^N with a diagonal +-1 signature.

    At most one timelike (-1) axis is supported; by convention it comes
    first, matching the Lorentz ambient used for hyperbolic space forms.
    """

    dimension: int
    signature: tuple[int, ...]

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if len(self.signature) != self.dimension:
            raise ValueError("signature length must equal dimension")
        if any(s not in (-1, 1) for s in self.signature):
            raise ValueError("signature entries must be +1 or -1")
        if sum(1 for s in self.signature if s < 0) > 1:
            raise ValueError("at most one timelike axis is supported")

    @classmethod
    def euclidean(cls, n: int) -> "InnerProduct":
        return cls(n, (1,) * n)

    @classmethod
    def lorentz(cls, n: int) -> "InnerProduct":
        """Minkowski product with the timelike axis first."""
        if n < 2:
            raise ValueError("a Lorentz product needs dimension >= 2")
        return cls(n, (-1,) + (1,) * (n - 1))

    @property
    def is_euclidean(self) -> bool:
        return all(s > 0 for s in self.signature)

    @property
    def signs(self) -> np.ndarray:
        return np.asarray(self.signature, dtype=float)

    def dot(self, u, v) -> float:
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        if u.shape != (self.dimension,) or v.shape != (self.dimension,):
            raise DimensionMismatch(
                f"expected vectors of length {self.dimension}, got {u.shape} and {v.shape}"
            )
        return float(np.dot(u * self.signs, v))

    def norm_sq(self, v) -> float:
        return self.dot(v, v)

    def gram(self, frame) -> np.ndarray:
        """Gram matrix of a frame given as rows."""
        frame = np.atleast_2d(np.asarray(frame, dtype=float))
        return (frame * self.signs) @ frame.T


def gram_schmidt(vectors, ip: InnerProduct | None = None, *, tol: float = 1e-10,
                 require_positive: bool = False) -> np.ndarray:
    """Modified Gram-Schmidt with one re-orthogonalization pass.

    Parameters
    ----------
    vectors : array_like
        Input vectors, one per row.
    ip : InnerProduct, optional
        Euclidean by default. For an indefinite product the output vectors
        have self-product +-1.
    tol : float
        Relative threshold for the rank check on each residual.
    require_positive : bool
        Demand spacelike vectors throughout (tangent frames of Riemannian
        submanifolds); a nonpositive self-product then raises NullVector.

    Returns the orthonormalized rows. Raises RankDeficient on linear
    dependence and NullVector on a null residual.
    """
    rows = np.atleast_2d(np.asarray(vectors, dtype=float))
    if ip is None:
        ip = InnerProduct.euclidean(rows.shape[1])
    if rows.shape[1] != ip.dimension:
        raise DimensionMismatch(
            f"vectors of length {rows.shape[1]} vs inner product on R^{ip.dimension}"
        )
    basis: list[np.ndarray] = []
    signs: list[float] = []
    for v in rows:
        scale = 1.0 + float(np.linalg.norm(v))
        w = v.astype(float).copy()
        for _ in range(2):
            for e, eps in zip(basis, signs):
                w = w - eps * ip.dot(w, e) * e
        resid = float(np.linalg.norm(w))
        if resid <= tol * scale:
            raise RankDeficient(
                f"vector {len(basis)} is dependent on its predecessors (residual {resid:.3e})"
            )
        q = ip.norm_sq(w)
        if abs(q) <= (tol * scale) ** 2:
            raise NullVector(f"residual of vector {len(basis)} is numerically null")
        if require_positive and q < 0.0:
            raise NullVector(
                f"vector {len(basis)} has negative self-product {q:.3e} where spacelike is required"
            )
        eps = 1.0 if q > 0.0 else -1.0
        basis.append(w / np.sqrt(abs(q)))
        signs.append(eps)
    return np.array(basis)


def complete_frame(frame, ip: InnerProduct, *, tol: float = 1e-8) -> tuple[np.ndarray, np.ndarray]:
    """Extend an orthonormal frame (rows) to a full pseudo-orthonormal basis.

    Candidates are the ambient standard basis vectors; each step appends the
    one whose residual has the largest |self-product| (pivoted, hence
    deterministic). Returns (added_rows, added_signs).
    """
    frame = np.atleast_2d(np.asarray(frame, dtype=float)) if np.size(frame) else \
        np.zeros((0, ip.dimension))
    n_have = frame.shape[0]
    if n_have and frame.shape[1] != ip.dimension:
        raise DimensionMismatch("frame vectors do not match the inner product dimension")
    held = [frame[i] for i in range(n_have)]
    held_signs = [1.0 if ip.norm_sq(frame[i]) > 0 else -1.0 for i in range(n_have)]

    def residual(e):
        w = e.astype(float).copy()
        for _ in range(2):
            for f, eps in zip(held, held_signs):
                w = w - eps * ip.dot(w, f) * f
        return w

    added: list[np.ndarray] = []
    added_signs: list[float] = []
    eye = np.eye(ip.dimension)
    while len(held) < ip.dimension:
        residuals = [residual(eye[j]) for j in range(ip.dimension)]
        qs = [ip.norm_sq(w) for w in residuals]
        j = int(np.argmax([abs(q) for q in qs]))
        q = qs[j]
        if abs(q) <= tol:
            raise RankDeficient("cannot complete the frame: every residual is near null")
        eps = 1.0 if q > 0.0 else -1.0
        w = residuals[j] / np.sqrt(abs(q))
        held.append(w)
        held_signs.append(eps)
        added.append(w)
        added_signs.append(eps)
    return np.array(added), np.array(added_signs)


@dataclass(frozen=True)
class EigenCluster:
    """A clustered eigenvalue with an orthonormal basis of its eigenspace.

    `value` is the multiplicity-weighted mean of the merged eigenvalues;
    `basis` has the eigenvectors as columns.
    """

    value: float
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.T


@dataclass(frozen=True)
class EigenClustering:
    """Eigen-clusters of a symmetric operator, values strictly increasing."""

    clusters: tuple[EigenCluster, ...]
    cluster_tol: float

    def __len__(self) -> int:
        return len(self.clusters)

    @property
    def values(self) -> list[float]:
        return [c.value for c in self.clusters]

    @property
    def dims(self) -> list[int]:
        return [c.dim for c in self.clusters]

    def reconstruct(self) -> np.ndarray:
        return sum(c.value * c.projector for c in self.clusters)


def default_cluster_tol(op) -> float:
    """1e-6 * (1 + spectral radius), the documented clustering default."""
    op = np.asarray(op, dtype=float)
    radius = float(np.abs(np.linalg.eigvalsh(0.5 * (op + op.T))).max()) if op.size else 0.0
    return 1e-6 * (1.0 + radius)


def eig_sym(op, cluster_tol: float | None = None) -> EigenClustering:
    """Symmetric eigendecomposition with single-linkage eigenvalue clustering.

    Consecutive eigenvalues whose gap is at most `cluster_tol` are merged;
    cluster representatives therefore differ pairwise by more than
    `cluster_tol`.
    """
    op = require_symmetric(op)
    w, v = np.linalg.eigh(op)
    if cluster_tol is None:
        cluster_tol = 1e-6 * (1.0 + float(np.abs(w).max()) if w.size else 1.0)
    clusters = []
    start = 0
    for i in range(1, len(w) + 1):
        if i == len(w) or w[i] - w[i - 1] > cluster_tol:
            clusters.append(EigenCluster(float(np.mean(w[start:i])), v[:, start:i].copy()))
            start = i
    return EigenClustering(tuple(clusters), float(cluster_tol))


def commutator_norm(a, b) -> float:
    """Frobenius norm of the commutator ab - ba."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"incompatible operator shapes {a.shape} and {b.shape}")
    return float(np.linalg.norm(a @ b - b @ a))
