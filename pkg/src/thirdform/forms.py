"""Algebra of codimension-two second fundamental forms.

A vector-valued symmetric bilinear form on an n-dimensional inner product
space with two-dimensional target is stored as the pair of its shape
operators (A1, A2) relative to an orthonormal normal basis (xi1, xi2). The
third fundamental form is then A1^2 + A2^2, and everything in this module
revolves around the case where that operator is a multiple of the identity:
the tangent space splits into blocks on which every A_xi^2 is scalar, and
each non-degenerate block carries a rigid (lambda, rho, sigma) structure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AdaptednessViolated,
    DegenerateFamily,
    InvalidParams,
    NotBilinear,
    NotFlat,
    NotUmbilicalThirdForm,
    NonConstantRho,
    UnequalHalfDimensions,
)
from .linalg import commutator_norm, eig_sym, frobenius, require_symmetric

__all__ = [
    "BilinearForm2",
    "AdaptedBlock",
    "AdaptedDecomposition",
    "BlockStructure",
    "DegenerateBlock",
    "PrincipalNormals",
    "third_form",
    "is_umbilical_form",
    "homothety_factor",
    "generic_normal",
    "decompose",
    "block_structure",
    "umbilical_subforms_check",
    "synth_block",
    "principal_normals",
    "rotate_normal_frame",
    "direct_sum",
    "conjugate",
    "simultaneous_eigenspaces",
]


@dataclass(frozen=True)
class BilinearForm2:
    """Pair of symmetric shape operators sharing one orthonormal frame."""

    a1: np.ndarray
    a2: np.ndarray

    def __post_init__(self):
        a1 = require_symmetric(self.a1, "first shape operator")
        a2 = require_symmetric(self.a2, "second shape operator")
        if a1.shape != a2.shape:
            raise ValueError(f"operator shapes differ: {a1.shape} vs {a2.shape}")
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)

    @property
    def n(self) -> int:
        return self.a1.shape[0]

    def shape_operator(self, xi) -> np.ndarray:
        """A_xi for a normal direction xi = (x1, x2)."""
        return float(xi[0]) * self.a1 + float(xi[1]) * self.a2

    def operator_scale(self) -> float:
        return 1.0 + max(frobenius(self.a1), frobenius(self.a2))


def third_form(f: BilinearForm2) -> np.ndarray:
    """A1^2 + A2^2: the sum over a tangent frame of squared form values."""
    return f.a1 @ f.a1 + f.a2 @ f.a2


def is_umbilical_form(components, tol: float = 1e-8) -> np.ndarray | None:
    """Test whether a vector-valued bilinear form is metric times a vector.

    `components` holds one n x n matrix per axis of the target space. The
    form vanishes on every orthonormal pair if and only if, in a single
    orthonormal basis, all off-diagonal entries are zero and the diagonal is
    constant; that criterion (plus symmetry) is checked here at relative
    tolerance `tol`. Returns the umbilic vector, or None.
    """
    comps = np.asarray(components, dtype=float)
    if comps.ndim == 2:
        comps = comps[None, :, :]
    if comps.ndim != 3 or comps.shape[1] != comps.shape[2]:
        raise NotBilinear(f"expected stacked square matrices, got shape {comps.shape}")
    if not np.all(np.isfinite(comps)):
        raise NotBilinear("components contain non-finite entries")
    n = comps.shape[1]
    scale = 1.0 + float(np.abs(comps).max())
    xi = np.empty(comps.shape[0])
    for k, m in enumerate(comps):
        if float(np.abs(m - m.T).max()) > tol * scale:
            return None
        off = m - np.diag(np.diag(m))
        diag = np.diag(m)
        mean = float(diag.mean()) if n else 0.0
        if float(np.abs(off).max(initial=0.0)) > tol * scale:
            return None
        if float(np.abs(diag - mean).max(initial=0.0)) > tol * scale:
            return None
        xi[k] = mean
    return xi


def homothety_factor(iii, tol: float = 1e-8) -> float | None:
    """If III = mu * I with mu > tol, return r^2 = 1/mu, else None.

    The residual test is Frobenius: ||III - mu I|| <= tol * (1 + mu).
    A nonpositive or tiny mu is rejected; a vanishing third form belongs to
    the totally geodesic branch, not here.
    """
    iii = require_symmetric(iii, "third form")
    n = iii.shape[0]
    mu = float(np.trace(iii)) / n
    if frobenius(iii - mu * np.eye(n)) > tol * (1.0 + abs(mu)):
        return None
    if mu <= tol:
        return None
    return 1.0 / mu


def _halton(count: int, base: int = 2, offset: float = 0.0) -> np.ndarray:
    """Van der Corput radical-inverse sequence with a rotation offset."""
    out = np.empty(count)
    for i in range(count):
        f, r, k = 1.0, 0.0, i + 1
        while k > 0:
            f /= base
            r += f * (k % base)
            k //= base
        out[i] = (r + offset) % 1.0
    return out


def _scalar_fit(m: np.ndarray) -> tuple[float, float]:
    """Best scalar approximation of a symmetric matrix and its residual."""
    n = m.shape[0]
    mu = float(np.trace(m)) / n
    return mu, frobenius(m - mu * np.eye(n))


def generic_normal(f: BilinearForm2, rng_seed: int = 0,
                   cluster_tol: float | None = None) -> tuple[np.ndarray, list[float]]:
    """Pick a normal direction whose squared shape operator separates blocks.

    Samples 64 low-discrepancy directions on the half circle (a seed-derived
    rotation makes runs reproducible per seed), clusters the eigenvalues of
    each A_xi^2, and returns the direction with the most clusters, ties
    broken by the largest minimal gap between cluster representatives.

    Returns (xi, eigenvalues of A_xi^2, one representative per cluster).
    Raises DegenerateFamily when every direction collapses to one cluster
    although A_xi^2 is not a scalar family, which means the clustering
    tolerance swallowed genuinely distinct eigenvalues.
    """
    rng = np.random.default_rng(rng_seed)
    offset = float(rng.random())
    thetas = np.pi * _halton(64, 2, offset)
    if cluster_tol is None:
        sq1 = f.a1 @ f.a1
        sq2 = f.a2 @ f.a2
        radius = float(max(np.abs(np.linalg.eigvalsh(sq1)).max(initial=0.0),
                           np.abs(np.linalg.eigvalsh(sq2)).max(initial=0.0)))
        cluster_tol = 1e-6 * (1.0 + 2.0 * radius)

    best = None
    for theta in thetas:
        xi = np.array([np.cos(theta), np.sin(theta)])
        a = f.shape_operator(xi)
        clustering = eig_sym(a @ a, cluster_tol)
        count = len(clustering)
        vals = clustering.values
        gap = min(np.diff(vals)) if count > 1 else np.inf
        key = (count, gap if np.isfinite(gap) else 0.0)
        if best is None or key > best[0]:
            best = (key, xi, clustering)
    _, xi, clustering = best
    if len(clustering) == 1:
        a = f.shape_operator(xi)
        _, resid = _scalar_fit(a @ a)
        if resid > cluster_tol * f.n:
            raise DegenerateFamily(
                "every sampled direction yields a single eigen-cluster but "
                f"A_xi^2 is not scalar (residual {resid:.3e}); cluster_tol is too coarse"
            )
    return xi, clustering.values


def _block_invariance_residual(basis: np.ndarray, op: np.ndarray) -> float:
    """|| (I - P) A P || for the projector P onto the block."""
    restricted = basis.T @ op @ basis
    return frobenius(op @ basis - basis @ restricted)


@dataclass(frozen=True)
class AdaptedBlock:
    """One invariant block with the nonnegative lambda values of the frame."""

    basis: np.ndarray
    lambda_pair: tuple[float, float]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.T


@dataclass(frozen=True)
class AdaptedDecomposition:
    """Orthogonal splitting adapted to a pair of shape operators.

    Blocks are the common eigenspaces of the squared shape operator family;
    on each one every A_xi^2 acts as lambda(xi)^2 times the identity. When
    the third form equals (1/r^2) I the factor r^2 is recorded.
    """

    blocks: tuple[AdaptedBlock, ...]
    homothety_r2: float | None

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def dims(self) -> list[int]:
        return [b.dim for b in self.blocks]


def decompose(f: BilinearForm2, tol: float = 1e-8, rng_seed: int = 0,
              cluster_tol: float | None = None) -> AdaptedDecomposition:
    """Split the tangent space into blocks on which each A_xi^2 is scalar.

    Requires an umbilical third form (A1^2 + A2^2 = mu I within tol),
    otherwise NotUmbilicalThirdForm is raised with the residual attached.
    The blocks come from eigen-clustering A_xi^2 at a generic direction and
    are verified invariant under both operators; the per-block lambda values
    satisfy lambda1^2 + lambda2^2 = mu.
    """
    iii = third_form(f)
    n = f.n
    mu = float(np.trace(iii)) / n
    resid = frobenius(iii - mu * np.eye(n))
    if resid > tol * (1.0 + abs(mu)):
        raise NotUmbilicalThirdForm(
            f"third form deviates from {mu:.6g} * I by {resid:.3e}", residual=resid,
        )
    if mu <= tol:
        # Vanishing form: both operators are numerically zero.
        block = AdaptedBlock(np.eye(n), (0.0, 0.0))
        return AdaptedDecomposition((block,), None)

    xi, _ = generic_normal(f, rng_seed, cluster_tol)
    a_xi = f.shape_operator(xi)
    clustering = eig_sym(a_xi @ a_xi, cluster_tol)
    op_scale = f.operator_scale()
    blocks = []
    for cluster in clustering.clusters:
        basis = cluster.basis
        for name, op in (("A1", f.a1), ("A2", f.a2)):
            r = _block_invariance_residual(basis, op)
            if r > tol * op_scale * 10.0:
                raise AdaptednessViolated(
                    f"cluster of dimension {basis.shape[1]} is not invariant under "
                    f"{name} (residual {r:.3e}); tolerance too tight or the form "
                    "has no adapted decomposition"
                )
        lams = []
        for op in (f.a1, f.a2):
            sq = basis.T @ (op @ op) @ basis
            val, r = _scalar_fit(sq)
            if r > tol * op_scale ** 2 * 10.0:
                raise AdaptednessViolated(
                    f"A_xi^2 is not scalar on a block (residual {r:.3e})"
                )
            lams.append(np.sqrt(max(val, 0.0)))
        blocks.append(AdaptedBlock(basis, (float(lams[0]), float(lams[1]))))
    return AdaptedDecomposition(tuple(blocks), 1.0 / mu)


@dataclass(frozen=True)
class BlockStructure:
    """Rigid structure of a non-degenerate block.

    A1 = lambda1 (P+ - P-) for the half-space projectors, and relative to
    the splitting the second operator is [[rho I, A*], [A, -rho I]] with
    A* A = sigma^2 I. The certificates dict carries the residuals of those
    identities together with the zero-trace checks.
    """

    lambda1: float
    rho: float
    sigma: float
    e_plus: np.ndarray
    e_minus: np.ndarray
    a_map: np.ndarray
    certificates: dict[str, float]

    @property
    def half_dim(self) -> int:
        return self.e_plus.shape[1]

    @property
    def lambda2(self) -> float:
        return float(np.hypot(self.rho, self.sigma))


@dataclass(frozen=True)
class DegenerateBlock:
    """Marker for a block whose lambda vanishes in some normal direction.

    The form on such a block takes values on the line orthogonal to the
    kernel direction; the remaining structure is the +-lambda eigensplit of
    the shape operator for that perpendicular direction, whose half
    dimensions need not agree.
    """

    kernel_direction: np.ndarray
    lambda_perp: float
    plus_dim: int
    minus_dim: int

    @property
    def is_degenerate(self) -> bool:
        return True


def block_structure(f: BilinearForm2, tol: float = 1e-8):
    """Extract (lambda1, rho, sigma) and the half spaces of a single block.

    Expects the restriction of a form to one adapted block: every A_xi^2
    scalar. If lambda(xi) vanishes for some direction xi != 0 the block is
    degenerate (the form takes values on a line) and a DegenerateBlock
    marker is returned instead; otherwise the +-lambda1 eigenspaces must
    have equal dimension and the returned structure satisfies
    rho^2 + sigma^2 = lambda2^2 with zero traces, all certified.
    """
    a1, a2 = f.a1, f.a2
    m = f.n
    scale = f.operator_scale() ** 2

    lam1_sq, r1 = _scalar_fit(a1 @ a1)
    lam2_sq, r2 = _scalar_fit(a2 @ a2)
    beta, rb = _scalar_fit(a1 @ a2 + a2 @ a1)
    worst = max(r1, r2, rb)
    if worst > tol * scale * 10.0:
        raise AdaptednessViolated(
            f"input is not a single block: A_xi^2 deviates from scalar by {worst:.3e}"
        )

    # lambda(xi)^2 is the quadratic form [[l1^2, beta/2], [beta/2, l2^2]] on xi.
    quad = np.array([[lam1_sq, beta / 2.0], [beta / 2.0, lam2_sq]])
    evals, evecs = np.linalg.eigh(quad)
    if evals[0] <= tol * scale:
        kernel = evecs[:, 0]
        lam_perp = float(np.sqrt(max(evals[1], 0.0)))
        perp = np.array([-kernel[1], kernel[0]])
        a_perp = f.shape_operator(perp)
        plus_dim = int(np.sum(np.linalg.eigvalsh(a_perp) > 0.5 * lam_perp)) if lam_perp > 0 else 0
        minus_dim = int(np.sum(np.linalg.eigvalsh(a_perp) < -0.5 * lam_perp)) if lam_perp > 0 else 0
        return DegenerateBlock(kernel, lam_perp, plus_dim, minus_dim)

    lam1 = float(np.sqrt(lam1_sq))
    # Spectrum of A1 is {+-lambda1}; half the gap separates the clusters.
    clustering = eig_sym(a1, cluster_tol=0.5 * lam1)
    if len(clustering) != 2:
        raise UnequalHalfDimensions(
            f"expected eigenvalues +-{lam1:.6g}, found clusters at {clustering.values}"
        )
    minus, plus = clustering.clusters
    if plus.dim != minus.dim:
        raise UnequalHalfDimensions(
            f"half dimensions differ: dim E+ = {plus.dim}, dim E- = {minus.dim}"
        )
    b_plus, b_minus = plus.basis, minus.basis

    rho_diag = np.diag(b_plus.T @ a2 @ b_plus)
    rho = float(rho_diag.mean())
    spread = float(np.abs(rho_diag - rho).max())
    full_plus = b_plus.T @ a2 @ b_plus
    off = frobenius(full_plus - rho * np.eye(plus.dim))
    if max(spread, off) > tol * scale * 10.0:
        raise NonConstantRho(
            f"A2 is not scalar on E+ (residual {max(spread, off):.3e})"
        )

    a_map = b_minus.T @ a2 @ b_plus
    sigma = float(np.sqrt(max(lam2_sq - rho ** 2, 0.0)))
    h = plus.dim
    eye = np.eye(h)
    certs = {
        "a_star_a": frobenius(a_map.T @ a_map - (lam2_sq - rho ** 2) * eye),
        "a_a_star": frobenius(a_map @ a_map.T - (lam2_sq - rho ** 2) * eye),
        "lambda2_split": abs(rho ** 2 + sigma ** 2 - lam2_sq),
        "trace_a1": abs(float(np.trace(a1))),
        "trace_a2": abs(float(np.trace(a2))),
        "rho_vs_beta": abs(rho - beta / (2.0 * lam1)),
        "minus_block": frobenius(b_minus.T @ a2 @ b_minus + rho * np.eye(h)),
    }
    return BlockStructure(lam1, rho, sigma, b_plus, b_minus, a_map, certs)


def umbilical_subforms_check(bs: BlockStructure, f: BilinearForm2,
                             tol: float = 1e-8) -> dict[str, float]:
    """Residuals of the four restricted-form identities of a block.

    On E+ the form is the metric times (lambda1 xi1 + rho xi2), on E- its
    negative, and the mixed forms alpha(X, A Y) and alpha(X, A* Y) equal the
    metric times sigma^2 xi2. Purely diagnostic: returns one residual per
    identity, keyed by subform.
    """
    bp, bm, am = bs.e_plus, bs.e_minus, bs.a_map
    h = bs.half_dim
    eye = np.eye(h)
    lam, rho, sig2 = bs.lambda1, bs.rho, bs.sigma ** 2
    res = {
        "plus": max(frobenius(bp.T @ f.a1 @ bp - lam * eye),
                    frobenius(bp.T @ f.a2 @ bp - rho * eye)),
        "minus": max(frobenius(bm.T @ f.a1 @ bm + lam * eye),
                     frobenius(bm.T @ f.a2 @ bm + rho * eye)),
        "mixed_a": max(frobenius(bp.T @ f.a1 @ bm @ am),
                       frobenius(bp.T @ f.a2 @ bm @ am - sig2 * eye)),
        "mixed_a_star": max(frobenius(bm.T @ f.a1 @ bp @ am.T),
                            frobenius(bm.T @ f.a2 @ bp @ am.T - sig2 * eye)),
    }
    res["max"] = max(res.values())
    res["tolerance"] = tol * f.operator_scale() ** 2
    return res


def synth_block(lambda1: float, rho: float, sigma: float, half_dim: int,
                rng_seed: int = 0) -> BilinearForm2:
    """Build a 2h-dimensional block with prescribed (lambda1, rho, sigma).

    A1 = lambda1 diag(I, -I); A2 = [[rho I, A^T], [A, -rho I]] with
    A = sigma Q for a Haar-random rotation Q (special orthogonal, so the
    half_dim = 1 case is deterministic). The third form comes out as
    (lambda1^2 + rho^2 + sigma^2) I.
    """
    if lambda1 <= 0.0:
        raise InvalidParams(f"lambda1 must be positive, got {lambda1}")
    if sigma < 0.0:
        raise InvalidParams(f"sigma must be nonnegative, got {sigma}")
    if half_dim < 1:
        raise InvalidParams(f"half_dim must be at least 1, got {half_dim}")
    for name, v in (("lambda1", lambda1), ("rho", rho), ("sigma", sigma)):
        if not np.isfinite(v):
            raise InvalidParams(f"{name} is not finite")
    h = int(half_dim)
    rng = np.random.default_rng(rng_seed)
    m = rng.standard_normal((h, h))
    q, r = np.linalg.qr(m)
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    a = sigma * q
    eye = np.eye(h)
    a1 = lambda1 * np.block([[eye, np.zeros((h, h))], [np.zeros((h, h)), -eye]])
    a2 = np.block([[rho * eye, a.T], [a, -rho * eye]])
    return BilinearForm2(a1, a2)


def simultaneous_eigenspaces(ops, cluster_tol: float | None = None) -> list[np.ndarray]:
    """Common eigenspace bases of a commuting family of symmetric operators.

    Refines the trivial splitting one operator at a time; with genuinely
    commuting input each returned basis spans a joint eigenspace. Bases are
    column matrices, ordered by their eigenvalue tuples.
    """
    ops = [require_symmetric(op) for op in ops]
    n = ops[0].shape[0]
    blocks = [np.eye(n)]
    for op in ops:
        tol = cluster_tol if cluster_tol is not None else \
            1e-6 * (1.0 + float(np.abs(np.linalg.eigvalsh(op)).max(initial=0.0)))
        refined = []
        for basis in blocks:
            sub = require_symmetric(basis.T @ op @ basis)
            for cluster in eig_sym(sub, tol).clusters:
                refined.append(basis @ cluster.basis)
        blocks = refined

    def key(basis):
        return tuple(float(np.trace(basis.T @ op @ basis)) / basis.shape[1] for op in ops)

    return sorted(blocks, key=key)


@dataclass(frozen=True)
class PrincipalNormals:
    """Joint eigenstructure of a commuting pair of shape operators.

    Each entry pairs an orthonormal block basis with the vector of
    eigenvalues (the principal normal in normal-space coordinates); the
    vectors are pairwise distinct.
    """

    etas: tuple[tuple[float, float], ...]
    bases: tuple[np.ndarray, ...]

    @property
    def count(self) -> int:
        return len(self.etas)

    @property
    def norms(self) -> list[float]:
        return [float(np.hypot(e[0], e[1])) for e in self.etas]


def principal_normals(f: BilinearForm2, tol: float = 1e-8) -> PrincipalNormals:
    """Principal normals of a flat pair: common eigenvalues of (A1, A2).

    Raises NotFlat unless the commutator norm is below tol relative to the
    operator scale. The squared norm of each principal normal equals the
    third form evaluated on the corresponding block.
    """
    comm = commutator_norm(f.a1, f.a2)
    scale = 1.0 + frobenius(f.a1) * frobenius(f.a2)
    if comm > tol * scale:
        raise NotFlat(f"commutator norm {comm:.3e} exceeds {tol * scale:.3e}")
    blocks = simultaneous_eigenspaces([f.a1, f.a2])
    etas = []
    bases = []
    for basis in blocks:
        mu1, _ = _scalar_fit(basis.T @ f.a1 @ basis)
        mu2, _ = _scalar_fit(basis.T @ f.a2 @ basis)
        etas.append((float(mu1), float(mu2)))
        bases.append(basis)
    return PrincipalNormals(tuple(etas), tuple(bases))


def rotate_normal_frame(f: BilinearForm2, theta: float) -> BilinearForm2:
    """Express the form in a normal frame rotated by theta."""
    c, s = float(np.cos(theta)), float(np.sin(theta))
    return BilinearForm2(c * f.a1 + s * f.a2, -s * f.a1 + c * f.a2)


def direct_sum(forms) -> BilinearForm2:
    """Block-diagonal direct sum of forms (shared normal frame)."""
    forms = list(forms)
    if not forms:
        raise ValueError("need at least one form")
    a1 = _block_diag([g.a1 for g in forms])
    a2 = _block_diag([g.a2 for g in forms])
    return BilinearForm2(a1, a2)


def conjugate(f: BilinearForm2, q: np.ndarray) -> BilinearForm2:
    """Express the form in the rotated tangent basis given by orthogonal q."""
    q = np.asarray(q, dtype=float)
    return BilinearForm2(q.T @ f.a1 @ q, q.T @ f.a2 @ q)


def _block_diag(mats) -> np.ndarray:
    total = sum(m.shape[0] for m in mats)
    out = np.zeros((total, total))
    at = 0
    for m in mats:
        d = m.shape[0]
        out[at:at + d, at:at + d] = m
        at += d
    return out
