"""Built-in immersions with closed-form derivatives and expected outcomes.

Every entry provides exact position, Jacobian and Hessian callbacks, so the
only numerical differentiation anywhere happens inside the intrinsic Ricci
computation. Charts: angle parametrizations for circles, stereographic
charts for spheres of dimension two and up, the upper-sheet chart for
hyperbolic factors, and a null-direction chart for the flat hypersurface
inside hyperbolic space. Composite entries (products, quadratic images)
are assembled by exact chain rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadCurvature,
    BadParams,
    CurvatureSumZero,
    SignatureMismatch,
    UnknownName,
)
from .geometry import Immersion
from .linalg import InnerProduct

__all__ = [
    "CatalogEntry",
    "FactorSpec",
    "ProductSpec",
    "make",
    "extrinsic_product",
    "umbilical_inclusion_product",
    "entry_names",
    "default_catalog",
]

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class CatalogEntry:
    """An immersion paired with what the classifier should conclude."""

    name: str
    immersion: Immersion
    expected: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Chart triples: (position, jacobian, hessian) callbacks with exact algebra.

def _circle_chart(r: float):
    def pos(t):
        t = float(np.asarray(t).reshape(()))
        return np.array([r * np.cos(t), r * np.sin(t)])

    def jac(t):
        t = float(np.asarray(t).reshape(()))
        return np.array([[-r * np.sin(t)], [r * np.cos(t)]])

    def hess(t):
        t = float(np.asarray(t).reshape(()))
        return np.array([[[-r * np.cos(t)]], [[-r * np.sin(t)]]])

    return pos, jac, hess, 1, 2


def _stereographic_chart(n: int, r: float, pole: str = "north"):
    """Chart of S^n(r) in R^{n+1} from the pole-complement projection.

    pole="north" places u = 0 at (0, ..., 0, r); "south" flips the last
    coordinate, covering the complementary hemisphere around -r.
    """
    flip = -1.0 if pole == "south" else 1.0

    def pos(u):
        u = np.asarray(u, dtype=float)
        s = float(u @ u)
        d = 1.0 + s
        return np.concatenate([2.0 * r * u / d, [flip * r * (1.0 - s) / d]])

    def jac(u):
        u = np.asarray(u, dtype=float)
        s = float(u @ u)
        d = 1.0 + s
        eye = np.eye(n)
        top = 2.0 * r * (eye / d - 2.0 * np.outer(u, u) / d ** 2)
        bottom = -flip * 4.0 * r * u / d ** 2
        return np.vstack([top, bottom[None, :]])

    def hess(u):
        u = np.asarray(u, dtype=float)
        s = float(u @ u)
        d = 1.0 + s
        eye = np.eye(n)
        uu = np.outer(u, u)
        out = np.empty((n + 1, n, n))
        for i in range(n):
            out[i] = 2.0 * r * (
                -2.0 * (np.outer(eye[i], u) + np.outer(u, eye[i]) + u[i] * eye) / d ** 2
                + 8.0 * u[i] * uu / d ** 3)
        out[n] = -flip * 4.0 * r * (eye / d ** 2 - 4.0 * uu / d ** 3)
        return out

    return pos, jac, hess, n, n + 1


def _hyperboloid_chart(n: int, radius: float):
    """Upper sheet of <X, X> = -radius^2 in Lorentz R^{n+1}, graph over u."""

    def pos(u):
        u = np.asarray(u, dtype=float)
        w = np.sqrt(radius ** 2 + float(u @ u))
        return np.concatenate([[w], u])

    def jac(u):
        u = np.asarray(u, dtype=float)
        w = np.sqrt(radius ** 2 + float(u @ u))
        return np.vstack([(u / w)[None, :], np.eye(n)])

    def hess(u):
        u = np.asarray(u, dtype=float)
        w = np.sqrt(radius ** 2 + float(u @ u))
        out = np.zeros((n + 1, n, n))
        out[0] = np.eye(n) / w - np.outer(u, u) / w ** 3
        return out

    return pos, jac, hess, n, n + 1


def _horosphere_chart(m: int, radius: float):
    """Isometric copy of R^m inside the hyperboloid of the given radius.

    j(v) = (R + |v|^2/(2R), |v|^2/(2R), v) in Lorentz R^{m+2}; the image is
    the flat hypersurface cut by a null hyperplane, umbilic with shape
    operator (1/R) I.
    """

    def pos(v):
        v = np.asarray(v, dtype=float)
        s = float(v @ v) / (2.0 * radius)
        return np.concatenate([[radius + s, s], v])

    def jac(v):
        v = np.asarray(v, dtype=float)
        return np.vstack([(v / radius)[None, :], (v / radius)[None, :], np.eye(m)])

    def hess(v):
        out = np.zeros((m + 2, m, m))
        out[0] = np.eye(m) / radius
        out[1] = np.eye(m) / radius
        return out

    return pos, jac, hess, m, m + 2


def _graph_chart(q1: np.ndarray, q2: np.ndarray):
    """(u, u^T q1 u / 2, u^T q2 u / 2): two quadratic heights over R^n."""
    n = q1.shape[0]

    def pos(u):
        u = np.asarray(u, dtype=float)
        return np.concatenate([u, [0.5 * u @ q1 @ u, 0.5 * u @ q2 @ u]])

    def jac(u):
        u = np.asarray(u, dtype=float)
        return np.vstack([np.eye(n), (q1 @ u)[None, :], (q2 @ u)[None, :]])

    def hess(u):
        out = np.zeros((n + 2, n, n))
        out[n] = q1
        out[n + 1] = q2
        return out

    return pos, jac, hess, n, n + 2


def _quadratic_map(coeff: np.ndarray):
    """Homogeneous quadratic map x -> Q(x, x) as an outer-chart triple."""

    def pos(x):
        return np.einsum('mpq,p,q->m', coeff, x, x)

    def jac(x):
        return 2.0 * np.einsum('mpq,q->mp', coeff, x)

    def hess(x):
        return 2.0 * coeff

    return pos, jac, hess


def _compose(outer, inner):
    """Exact chain rule for (pos, jac, hess) triples; inner maps the chart."""
    opos, ojac, ohess = outer
    ipos, ijac, ihess, n, _ = inner

    def pos(u):
        return opos(ipos(u))

    def jac(u):
        return ojac(ipos(u)) @ ijac(u)

    def hess(u):
        x = ipos(u)
        ji = ijac(u)
        first = np.einsum('mpq,pa,qb->mab', ohess(x), ji, ji)
        second = np.einsum('mp,pab->mab', ojac(x), ihess(u))
        return first + second

    return pos, jac, hess


def _product(charts):
    """Direct product of chart triples: block-stacked derivatives."""
    ns = [c[3] for c in charts]
    dims = [c[4] for c in charts]
    n, N = sum(ns), sum(dims)
    u_off = np.cumsum([0] + ns)
    x_off = np.cumsum([0] + dims)

    def split(u):
        u = np.asarray(u, dtype=float)
        return [u[u_off[i]:u_off[i + 1]] for i in range(len(charts))]

    def pos(u):
        return np.concatenate([c[0](p) for c, p in zip(charts, split(u))])

    def jac(u):
        out = np.zeros((N, n))
        for i, (c, p) in enumerate(zip(charts, split(u))):
            out[x_off[i]:x_off[i + 1], u_off[i]:u_off[i + 1]] = c[1](p)
        return out

    def hess(u):
        out = np.zeros((N, n, n))
        for i, (c, p) in enumerate(zip(charts, split(u))):
            out[x_off[i]:x_off[i + 1],
                u_off[i]:u_off[i + 1],
                u_off[i]:u_off[i + 1]] = c[2](p)
        return out

    return pos, jac, hess, n, N


def _pad_ambient(chart, extra: int):
    """Embed the chart in `extra` more flat coordinates (appended zeros)."""
    pos0, jac0, hess0, n, N = chart

    def pos(u):
        return np.concatenate([pos0(u), np.zeros(extra)])

    def jac(u):
        return np.vstack([jac0(u), np.zeros((extra, n))])

    def hess(u):
        return np.concatenate([hess0(u), np.zeros((extra, n, n))], axis=0)

    return pos, jac, hess, n, N + extra


def _box(n: int, lo: float, hi: float) -> tuple[tuple[float, float], ...]:
    return tuple((lo, hi) for _ in range(n))


# ---------------------------------------------------------------------------
# Entry constructors.

def _require(cond: bool, message: str):
    if not cond:
        raise BadParams(message)


def _make_plane(params) -> CatalogEntry:
    n = int(params.get("n", 2))
    _require(n >= 1, f"plane needs n >= 1, got {n}")
    chart = _pad_ambient((lambda u: np.asarray(u, dtype=float),
                          lambda u: np.eye(n),
                          lambda u: np.zeros((n, n, n)), n, n), 2)
    imm = Immersion(n, InnerProduct.euclidean(n + 2), _box(n, -1.0, 1.0),
                    chart[0], chart[1], chart[2], name="plane",
                    params={"n": n})
    return CatalogEntry("plane", imm, {"kind": "TotallyGeodesic", "flat": True})


def _make_circle(params) -> CatalogEntry:
    r = float(params.get("r", 1.0))
    _require(r > 0, f"circle needs r > 0, got {r}")
    chart = _pad_ambient(_circle_chart(r), 1)
    imm = Immersion(1, InnerProduct.euclidean(3), ((0.0, TWO_PI),),
                    chart[0], chart[1], chart[2], name="circle",
                    params={"r": r})
    return CatalogEntry("circle", imm, {
        "kind": "RoundSphere", "homothety_r2": r ** 2, "flat": True,
    })


def _make_helix(params) -> CatalogEntry:
    a = float(params.get("a", 1.0))
    b = float(params.get("b", 1.0))
    _require(a > 0 and b != 0, f"helix needs a > 0 and b != 0, got a={a}, b={b}")

    def pos(t):
        t = float(np.asarray(t).reshape(()))
        return np.array([a * np.cos(t), a * np.sin(t), b * t])

    def jac(t):
        t = float(np.asarray(t).reshape(()))
        return np.array([[-a * np.sin(t)], [a * np.cos(t)], [b]])

    def hess(t):
        t = float(np.asarray(t).reshape(()))
        return np.array([[[-a * np.cos(t)]], [[-a * np.sin(t)]], [[0.0]]])

    kappa = a / (a ** 2 + b ** 2)
    imm = Immersion(1, InnerProduct.euclidean(3), ((0.0, 2 * TWO_PI),),
                    pos, jac, hess, name="helix", params={"a": a, "b": b})
    return CatalogEntry("helix", imm, {
        "kind": "RoundSphere", "homothety_r2": 1.0 / kappa ** 2, "flat": True,
    })


def _make_round_sphere(params) -> CatalogEntry:
    n = int(params.get("n", 2))
    r = float(params.get("r", 1.0))
    pole = str(params.get("pole", "north"))
    _require(n >= 1, f"round_sphere needs n >= 1, got {n}")
    _require(r > 0, f"round_sphere needs r > 0, got {r}")
    _require(pole in ("north", "south"), f"pole must be north or south, got {pole!r}")
    base = _circle_chart(r) if n == 1 else _stereographic_chart(n, r, pole)
    chart = _pad_ambient(base, 1)
    domain = ((0.0, TWO_PI),) if n == 1 else _box(n, -0.9, 0.9)
    imm = Immersion(n, InnerProduct.euclidean(chart[4]), domain,
                    chart[0], chart[1], chart[2], name="round_sphere",
                    params={"n": n, "r": r, "pole": pole})
    return CatalogEntry("round_sphere", imm, {
        "kind": "RoundSphere", "homothety_r2": r ** 2, "flat": True,
        "block_count": 1,
    })


def _sphere_factor_chart(n: int, r: float, pole: str = "north"):
    return _circle_chart(r) if n == 1 else _stereographic_chart(n, r, pole)


def _make_sphere_product(params) -> CatalogEntry:
    m = int(params.get("m", 1))
    k = int(params.get("k", 1))
    r1 = float(params.get("r1", params.get("r", 1.0)))
    r2 = float(params.get("r2", r1))
    _require(m >= 1 and k >= 1, f"sphere_product needs m, k >= 1, got {m}, {k}")
    _require(r1 > 0 and r2 > 0, f"sphere_product needs positive radii, got {r1}, {r2}")
    chart = _product([_sphere_factor_chart(m, r1), _sphere_factor_chart(k, r2)])
    domain = (((0.0, TWO_PI),) if m == 1 else _box(m, -0.9, 0.9)) \
        + (((0.0, TWO_PI),) if k == 1 else _box(k, -0.9, 0.9))
    imm = Immersion(m + k, InnerProduct.euclidean(chart[4]), domain,
                    chart[0], chart[1], chart[2], name="sphere_product",
                    params={"m": m, "k": k, "r1": r1, "r2": r2})
    equal = abs(r1 - r2) < 1e-12
    expected = {"flat": True}
    if equal:
        expected.update({"kind": "SphereProduct", "homothety_r2": r1 ** 2,
                         "block_count": 2})
    else:
        expected["kind"] = "NotHomothetic"
    return CatalogEntry("sphere_product", imm, expected)


def _make_clifford_torus(params) -> CatalogEntry:
    r = float(params.get("r", 1.0))
    _require(r > 0, f"clifford_torus needs r > 0, got {r}")
    rho = r / np.sqrt(2.0)
    chart = _product([_circle_chart(rho), _circle_chart(rho)])
    imm = Immersion(2, InnerProduct.euclidean(4),
                    ((0.0, TWO_PI), (0.0, TWO_PI)),
                    chart[0], chart[1], chart[2], curvature=1.0 / r ** 2,
                    name="clifford_torus", params={"r": r})
    return CatalogEntry("clifford_torus", imm, {
        "kind": "SphereProduct", "homothety_r2": rho ** 2, "flat": True,
        "block_count": 2, "minimal_in_space_form": True,
        "third_form_qc_factor": 1.0 / r ** 2,
    })


VERONESE_COEFF = np.zeros((5, 3, 3))
_s3 = 1.0 / (2.0 * np.sqrt(3.0))
VERONESE_COEFF[0, 0, 1] = VERONESE_COEFF[0, 1, 0] = _s3
VERONESE_COEFF[1, 0, 2] = VERONESE_COEFF[1, 2, 0] = _s3
VERONESE_COEFF[2, 1, 2] = VERONESE_COEFF[2, 2, 1] = _s3
VERONESE_COEFF[3, 0, 0] = _s3
VERONESE_COEFF[3, 1, 1] = -_s3
VERONESE_COEFF[4, 0, 0] = VERONESE_COEFF[4, 1, 1] = 1.0 / 6.0
VERONESE_COEFF[4, 2, 2] = -1.0 / 3.0


def _make_veronese(params) -> CatalogEntry:
    c = float(params.get("c", 1.0))
    if c <= 0:
        raise BadCurvature(f"the quadratic sphere-to-sphere surface needs c > 0, got {c}")
    # Domain sphere of curvature c/3; the degree-two map lands on the
    # sphere of curvature c and is an isometry onto its image.
    r_dom = np.sqrt(3.0 / c)
    inner = _stereographic_chart(2, r_dom)
    outer = _quadratic_map(np.sqrt(c) * VERONESE_COEFF)
    pos, jac, hess = _compose(outer, inner)
    imm = Immersion(2, InnerProduct.euclidean(5), _box(2, -0.9, 0.9),
                    pos, jac, hess, curvature=c, name="veronese",
                    params={"c": c})
    return CatalogEntry("veronese", imm, {
        "kind": "VeroneseLike", "homothety_r2": 1.5 / c, "flat": False,
        "minimal_in_space_form": True, "gaussian_curvature": c / 3.0,
        "third_form_qc_factor": 2.0 * c / 3.0,
        "third_form_euclidean_factor": 5.0 * c / 3.0,
    })


def _parse_matrix(value, n: int, what: str) -> np.ndarray:
    if isinstance(value, str):
        value = [float(x) for x in value.replace(",", " ").split()]
    m = np.asarray(value, dtype=float)
    if m.size != n * n:
        raise BadParams(f"{what} needs {n * n} entries, got {m.size}")
    m = m.reshape(n, n)
    return 0.5 * (m + m.T)


def _make_graph_custom(params) -> CatalogEntry:
    n = int(params.get("n", 2))
    _require(n >= 1, f"graph_custom needs n >= 1, got {n}")
    q1 = _parse_matrix(params.get("q1", np.diag(np.arange(1.0, n + 1.0))), n, "q1")
    q2_default = np.zeros((n, n))
    if n >= 2:
        q2_default[0, 1] = q2_default[1, 0] = 1.0
    q2 = _parse_matrix(params.get("q2", q2_default), n, "q2")
    chart = _graph_chart(q1, q2)
    imm = Immersion(n, InnerProduct.euclidean(n + 2), _box(n, -1.0, 1.0),
                    chart[0], chart[1], chart[2], name="graph_custom",
                    params={"n": n, "q1": q1.tolist(), "q2": q2.tolist()})
    return CatalogEntry("graph_custom", imm, {"kind": "NotHomothetic"})


# ---------------------------------------------------------------------------
# Products across space forms.

@dataclass(frozen=True)
class FactorSpec:
    """One factor of an extrinsic product: a whole space form.

    kind "sphere" is the round sphere of curvature c > 0 and dimension n;
    kind "hyperbolic" the hyperbolic space of curvature c < 0, allowed only
    as the leading factor since it supplies the timelike axis.
    """

    kind: str
    n: int
    c: float

    def __post_init__(self):
        if self.kind not in ("sphere", "hyperbolic"):
            raise BadParams(f"unknown factor kind {self.kind!r}")
        if self.n < 1:
            raise BadParams("factor dimension must be positive")
        if self.kind == "sphere" and self.c <= 0:
            raise BadCurvature(f"sphere factor needs c > 0, got {self.c}")
        if self.kind == "hyperbolic" and self.c >= 0:
            raise BadCurvature(f"hyperbolic factor needs c < 0, got {self.c}")

    @property
    def radius(self) -> float:
        return 1.0 / np.sqrt(abs(self.c))

    @property
    def ambient_dim(self) -> int:
        return self.n + 1


@dataclass(frozen=True)
class ProductSpec:
    """Factors of an extrinsic product of space forms."""

    factors: tuple[FactorSpec, ...]

    def __post_init__(self):
        if not self.factors:
            raise BadParams("a product needs at least one factor")
        hyperbolic = [i for i, f in enumerate(self.factors) if f.kind == "hyperbolic"]
        if hyperbolic and hyperbolic != [0]:
            raise SignatureMismatch(
                "a hyperbolic factor must come first and be unique: "
                "the assembled ambient has a single timelike axis"
            )

    @property
    def target_curvature(self) -> float:
        total = sum(1.0 / f.c for f in self.factors)
        if abs(total) < 1e-15:
            raise CurvatureSumZero(
                "reciprocal curvatures sum to zero; the product lies on no "
                "central quadric"
            )
        return 1.0 / total


def extrinsic_product(spec: ProductSpec) -> Immersion:
    """Product of space forms inside the quadric of curvature c.

    c is the harmonic-style combination (sum of 1/c_i)^(-1); the position
    norm <f, f> = sum 1/c_i = 1/c is certified by the quadric check during
    reduction. With a hyperbolic factor the ambient is Lorentz and c < 0.
    """
    charts = []
    for f in spec.factors:
        if f.kind == "sphere":
            charts.append(_sphere_factor_chart(f.n, f.radius))
        else:
            charts.append(_hyperboloid_chart(f.n, f.radius))
    chart = _product(charts)
    c = spec.target_curvature
    lorentz = spec.factors[0].kind == "hyperbolic"
    if lorentz and c > 0:
        raise SignatureMismatch(
            "a hyperbolic factor with positive target curvature lands on a "
            "Lorentzian quadric, which is out of scope"
        )
    ambient = InnerProduct.lorentz(chart[4]) if lorentz \
        else InnerProduct.euclidean(chart[4])
    domain = []
    for f in spec.factors:
        if f.kind == "sphere":
            domain.extend(((0.0, TWO_PI),) if f.n == 1 else _box(f.n, -0.9, 0.9))
        else:
            domain.extend(_box(f.n, -1.0, 1.0))
    n = sum(f.n for f in spec.factors)
    return Immersion(n, ambient, tuple(domain), chart[0], chart[1], chart[2],
                     curvature=c, name="extrinsic_product",
                     params={"factors": [(f.kind, f.n, f.c) for f in spec.factors]})


def umbilical_inclusion_product(factors, c: float) -> Immersion:
    """Product of Euclidean immersions pushed into hyperbolic space.

    The factors multiply to an immersion into R^{N-1}, which is then
    included as the flat umbilic hypersurface of the hyperbolic space of
    curvature c < 0 (shape operator sqrt(|c|) I for the inclusion's normal).
    """
    if c >= 0:
        raise BadCurvature(f"umbilical inclusion targets need c < 0, got {c}")
    factors = list(factors)
    if not factors:
        raise BadParams("need at least one Euclidean factor")
    for f in factors:
        if not f.ambient.is_euclidean:
            raise SignatureMismatch("factors must be Euclidean immersions")
    radius = 1.0 / np.sqrt(-c)
    charts = [(f.position, f.jacobian, f.hessian, f.n, f.ambient_dim)
              for f in factors]
    base = _product(charts) if len(charts) > 1 else charts[0]
    outer = _horosphere_chart(base[4], radius)
    pos, jac, hess = _compose((outer[0], outer[1], outer[2]), base)
    domain = tuple(iv for f in factors for iv in f.domain)
    n = sum(f.n for f in factors)
    return Immersion(n, InnerProduct.lorentz(base[4] + 2), domain,
                     pos, jac, hess, curvature=c,
                     name="umbilical_inclusion_product",
                     params={"c": c, "factors": [f.name for f in factors]})


def _make_hyperbolic_product(params) -> CatalogEntry:
    c0 = float(params.get("c0", -0.5))
    n0 = int(params.get("n0", 2))
    c1 = float(params.get("c1", 1.0))
    n1 = int(params.get("n1", 1))
    spec = ProductSpec((FactorSpec("hyperbolic", n0, c0), FactorSpec("sphere", n1, c1)))
    imm = extrinsic_product(spec)
    return CatalogEntry("hyperbolic_product", imm, {
        "kind": "NotHomothetic", "flat": True,
        "target_curvature": spec.target_curvature,
    })


def _make_horosphere_torus(params) -> CatalogEntry:
    c = float(params.get("c", -1.0))
    r1 = float(params.get("r1", 1.0))
    r2 = float(params.get("r2", 1.0))
    _require(r1 > 0 and r2 > 0, "horosphere_torus needs positive radii")
    circles = []
    for r in (r1, r2):
        chart = _circle_chart(r)
        circles.append(Immersion(1, InnerProduct.euclidean(2), ((0.0, TWO_PI),),
                                 chart[0], chart[1], chart[2], name=f"circle({r})"))
    imm = umbilical_inclusion_product(circles, c)
    expected = {"flat": True, "target_curvature": c}
    if abs(r1 - r2) < 1e-12:
        mu = 1.0 / r1 ** 2 - c
        expected.update({"kind": "SphereProduct", "homothety_r2": 1.0 / mu,
                         "block_count": 2})
    else:
        expected["kind"] = "NotHomothetic"
    return CatalogEntry("horosphere_torus", imm, expected)


_MAKERS = {
    "plane": _make_plane,
    "circle": _make_circle,
    "helix": _make_helix,
    "round_sphere": _make_round_sphere,
    "sphere_product": _make_sphere_product,
    "clifford_torus": _make_clifford_torus,
    "veronese": _make_veronese,
    "graph_custom": _make_graph_custom,
    "hyperbolic_product": _make_hyperbolic_product,
    "horosphere_torus": _make_horosphere_torus,
}


def entry_names() -> list[str]:
    return sorted(_MAKERS)


def make(name: str, params: dict | None = None) -> CatalogEntry:
    """Build a catalog entry by name; unknown names raise UnknownName."""
    if name not in _MAKERS:
        raise UnknownName(f"no catalog entry named {name!r}; "
                          f"known: {', '.join(entry_names())}")
    return _MAKERS[name](dict(params or {}))


def default_catalog() -> list[CatalogEntry]:
    """The fixed certification list used by verify-catalog."""
    return [
        make("plane"),
        make("circle", {"r": 1.0}),
        make("helix", {"a": 1.0, "b": 1.0}),
        make("round_sphere", {"n": 2, "r": 2.0}),
        make("round_sphere", {"n": 3, "r": 1.0}),
        make("sphere_product", {"m": 1, "k": 1, "r": 1.0}),
        make("sphere_product", {"m": 1, "k": 2, "r1": 1.0, "r2": 2.0}),
        make("clifford_torus", {"r": 1.0}),
        make("veronese", {"c": 1.0}),
        make("graph_custom", {}),
        make("hyperbolic_product", {}),
        make("horosphere_torus", {}),
    ]
