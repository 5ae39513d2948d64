"""Shared helpers: random rotations, random forms, and the pair-sampling
oracle for umbilicity that several suites check the fast criterion against."""

import numpy as np
import pytest


def haar_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed rotation with positive determinant."""
    m = rng.normal(size=(n, n))
    q, r = np.linalg.qr(m)
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def random_symmetric(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    m = rng.normal(size=(n, n)) * scale
    return 0.5 * (m + m.T)


def orthonormal_pair_oracle(components, pairs: int = 10_000, seed: int = 0,
                            tol: float = 1e-8) -> bool:
    """Umbilicity by brute force: a symmetric vector-valued form is metric
    times a fixed vector exactly when it vanishes on every orthonormal pair,
    so sample `pairs` random orthonormal (X, Y) and test the form values.

    Deliberately independent of the production criterion: no basis choice,
    no diagonal inspection, just random pairs.
    """
    comps = np.asarray(components, dtype=float)
    if comps.ndim == 2:
        comps = comps[None]
    _, n, _ = comps.shape
    if n == 1:
        return True
    rng = np.random.default_rng(seed)
    xs = rng.normal(size=(pairs, n))
    xs /= np.linalg.norm(xs, axis=1, keepdims=True)
    ys = rng.normal(size=(pairs, n))
    ys -= np.sum(xs * ys, axis=1, keepdims=True) * xs
    ys /= np.linalg.norm(ys, axis=1, keepdims=True)
    vals = np.einsum("pi,kij,pj->pk", xs, comps, ys)
    scale = 1.0 + float(np.abs(comps).max())
    return bool(np.abs(vals).max() <= tol * scale)


def fd_jacobian(pos, u: np.ndarray, h: float = 1e-6) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    cols = []
    for a in range(u.size):
        e = np.zeros_like(u)
        e[a] = h
        cols.append((np.asarray(pos(u + e)) - np.asarray(pos(u - e))) / (2 * h))
    return np.stack(cols, axis=1)


def fd_hessian(pos, u: np.ndarray, h: float = 1e-4) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    n = u.size
    f0 = np.asarray(pos(u), dtype=float)
    out = np.empty((f0.size, n, n))
    eye = np.eye(n)
    for a in range(n):
        out[:, a, a] = (np.asarray(pos(u + h * eye[a])) - 2 * f0
                        + np.asarray(pos(u - h * eye[a]))) / h ** 2
        for b in range(a + 1, n):
            mixed = (np.asarray(pos(u + h * (eye[a] + eye[b])))
                     - np.asarray(pos(u + h * (eye[a] - eye[b])))
                     - np.asarray(pos(u - h * (eye[a] - eye[b])))
                     + np.asarray(pos(u - h * (eye[a] + eye[b])))) / (4 * h ** 2)
            out[:, a, b] = out[:, b, a] = mixed
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240814)
