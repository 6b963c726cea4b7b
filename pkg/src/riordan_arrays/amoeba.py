"""Newton polygon and amoeba of ``R(z, w) = P(z) w - Q(z)``.

On the zero set ``w = Q(z)/P(z)``, so with ``z = exp(t + i phi)`` the amoeba
is the set of points ``(t, f(t, phi))`` where

    f(t, phi) = log|lc(Q)/lc(P)| + sum_i log|z - a_i| - sum_j log|z - b_j|,

``a_i`` the roots of Q and ``b_j`` the roots of P.  Each vertical section is
the interval ``[min_phi f, max_phi f]``.  Nonzero roots of P give tentacles
going up along ``xi = log|b_j|``, nonzero roots of Q tentacles going down.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize_scalar

from .algebra import distinct_values, has_repeated_root, poly_gcd, poly_roots
from .cauchy import DifferenceEquation
from .errors import DegenerateHull

MEMBERSHIP_TOL = 1e-9
TENTACLE_TOL = 1e-8
ROOT_ON_CIRCLE_TOL = 1e-12
REFINE_XATOL = 1e-10

INSIDE = "inside_amoeba"
IN_E = "in_E_m1"
OTHER = "other_component"


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list:
    """Monotone chain; counterclockwise vertices, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple
    vertices: tuple

    @property
    def is_degenerate(self) -> bool:
        return len(self.vertices) < 3

    def area2(self) -> int:
        """Twice the enclosed area (shoelace)."""
        v = self.vertices
        if len(v) < 3:
            return 0
        return abs(sum(v[i][0] * v[(i + 1) % len(v)][1] - v[(i + 1) % len(v)][0] * v[i][1]
                       for i in range(len(v))))

    def boundary_lattice_count(self) -> int:
        v = self.vertices
        if len(v) == 1:
            return 1
        if len(v) == 2:
            return math.gcd(abs(v[1][0] - v[0][0]), abs(v[1][1] - v[0][1])) + 1
        return sum(math.gcd(abs(v[(i + 1) % len(v)][0] - v[i][0]),
                            abs(v[(i + 1) % len(v)][1] - v[i][1])) for i in range(len(v)))

    def lattice_count(self) -> int:
        """``|N_R cap Z^2|`` by Pick's theorem."""
        b = self.boundary_lattice_count()
        if self.is_degenerate:
            return b
        interior = (self.area2() - b + 2) // 2
        return interior + b


def newton_polygon(eq: DifferenceEquation) -> NewtonPolygon:
    points = tuple(sorted(eq.support()))
    return NewtonPolygon(points, tuple(convex_hull(points)))


@dataclass(frozen=True)
class Cone:
    """Cone spanned by two primitive integer generators, ``g1`` clockwise of ``g2``."""

    generators: tuple

    def contains_interior(self, p, q) -> bool:
        g1, g2 = self.generators
        return (g1[0] * q - g1[1] * p) > 0 and (p * g2[1] - q * g2[0]) > 0

    def contains(self, p, q) -> bool:
        g1, g2 = self.generators
        return (g1[0] * q - g1[1] * p) >= 0 and (p * g2[1] - q * g2[0]) >= 0


def _primitive(v):
    g = math.gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def cone_omega(np_: NewtonPolygon, corner=None) -> Cone:
    """Cone generated by ``corner - tau`` over the polygon; corner defaults to ``(m, 1)``."""
    if corner is None:
        corner = max((pt for pt in np_.points if pt[1] == 1), default=None)
    if corner not in np_.vertices:
        raise ValueError(f"{corner} is not a vertex of the Newton polygon")
    if np_.is_degenerate:
        raise DegenerateHull("Newton polygon is a segment; the cone has empty interior")
    vecs = [_primitive((corner[0] - v[0], corner[1] - v[1]))
            for v in np_.vertices if v != corner]
    # corner is a vertex, so the vectors fit in an open half-plane
    g1 = next(u for u in vecs if all(u[0] * v[1] - u[1] * v[0] >= 0 for v in vecs))
    g2 = next(u for u in vecs if all(v[0] * u[1] - v[1] * u[0] >= 0 for v in vecs))
    if g1[0] * g2[1] - g1[1] * g2[0] == 0:
        raise DegenerateHull("cone generators are collinear")
    return Cone((g1, g2))


def reduced_pair(eq: DifferenceEquation):
    """``(P/g, Q/g)`` with ``g = gcd(P, Q)``.

    A common factor ``g`` makes ``R = g (P' w - Q')``; its zero set then
    contains vertical lines ``z = const`` besides the graph of ``w = Q/P``.
    The section function ``f`` describes the graph part only.
    """
    g = poly_gcd(eq.P, eq.Q)
    if g.degree < 1:
        return eq.P, eq.Q
    return eq.P.exact_div(g), eq.Q.exact_div(g)


@lru_cache(maxsize=64)
def _full_roots(eq: DifferenceEquation):
    a = tuple(poly_roots(eq.Q)) if eq.Q.degree >= 1 else ()
    b = tuple(poly_roots(eq.P)) if eq.P.degree >= 1 else ()
    return a, b


@lru_cache(maxsize=64)
def _root_data(eq: DifferenceEquation):
    P, Q = reduced_pair(eq)
    a = tuple(poly_roots(Q)) if Q.degree >= 1 else ()
    b = tuple(poly_roots(P)) if P.degree >= 1 else ()
    const = math.log(abs(float(Q.leading) / float(P.leading)))
    return a, b, const


def amoeba_f(eq: DifferenceEquation, t, phi):
    """``f(t, phi)`` (vectorized in phi)."""
    a, b, const = _root_data(eq)
    z = np.exp(t + 1j * np.asarray(phi, dtype=float))
    with np.errstate(divide="ignore"):
        out = np.full(z.shape, const)
        for r in a:
            out = out + np.log(np.abs(z - r))
        for r in b:
            out = out - np.log(np.abs(z - r))
    return out


def tentacle_abscissas(eq: DifferenceEquation):
    """``(up, down)``: log-moduli of nonzero roots of P and of Q."""
    a, b, _ = _root_data(eq)
    up = sorted(math.log(abs(r)) for r in distinct_values([abs(r) for r in b if r != 0]))
    down = sorted(math.log(abs(r)) for r in distinct_values([abs(r) for r in a if r != 0]))
    return up, down


@dataclass
class AmoebaSection:
    t: float
    lo: float
    hi: float
    samples: np.ndarray = field(repr=False)
    phi_lo: float = 0.0
    phi_hi: float = 0.0
    tentacle: bool = False
    root_on_circle: bool = False


def _refine(fun, phi0, h):
    r = minimize_scalar(fun, bounds=(phi0 - h, phi0 + h), method="bounded",
                        options={"xatol": REFINE_XATOL})
    return r.x, r.fun


def section(eq: DifferenceEquation, t: float, nphi: int = 1024) -> AmoebaSection:
    """Sampled section ``{f(t, phi)}`` with refined extrema."""
    a, b, _ = _root_data(eq)
    phis = 2 * np.pi * np.arange(nphi) / nphi
    vals = amoeba_f(eq, t, phis)
    z = np.exp(t + 1j * phis)
    roots = np.array(a + b, dtype=complex)
    near = bool(roots.size) and float(np.min(np.abs(z[:, None] - roots[None, :]))) \
        < ROOT_ON_CIRCLE_TOL
    tentacle = any(abs(t - math.log(abs(r))) < TENTACLE_TOL for r in a + b if r != 0)
    i_lo, i_hi = int(np.argmin(vals)), int(np.argmax(vals))
    lo, hi = float(vals[i_lo]), float(vals[i_hi])
    phi_lo, phi_hi = float(phis[i_lo]), float(phis[i_hi])
    if np.isfinite(lo) and np.isfinite(hi):
        h = 2 * np.pi / nphi
        x, v = _refine(lambda p: float(amoeba_f(eq, t, [p])[0]), phi_lo, h)
        if v < lo:
            phi_lo, lo = x, v
        x, v = _refine(lambda p: -float(amoeba_f(eq, t, [p])[0]), phi_hi, h)
        if -v > hi:
            phi_hi, hi = x, -v
    samples = np.column_stack([phis, vals])
    return AmoebaSection(float(t), lo, hi, samples, phi_lo % (2 * np.pi),
                         phi_hi % (2 * np.pi), tentacle, near)


def upper_tentacle_bound(eq: DifferenceEquation) -> float:
    """``log max |b_j|`` over nonzero roots of P (``-inf`` if there are none)."""
    up, _ = tentacle_abscissas(eq)
    return max(up) if up else -math.inf


def membership(eq: DifferenceEquation, xi: float, eta: float, nphi: int = 1024) -> str:
    """Classify ``(xi, eta)`` as on the amoeba, in ``E_(m,1)``, or elsewhere.

    ``E_(m,1)`` is the complement component above the sheet and to the right
    of every upward tentacle: there ``|P w| > |Q|`` on the whole torus, which
    is where the expansion of ``1/R`` in negative powers of ``z`` and ``w``
    converges.
    """
    sec = section(eq, xi, nphi)
    if sec.lo - MEMBERSHIP_TOL <= eta <= sec.hi + MEMBERSHIP_TOL:
        return INSIDE
    if eta > sec.hi and xi > upper_tentacle_bound(eq):
        return IN_E
    return OTHER


@dataclass
class Census:
    N1: int
    N2: int
    kappa: int
    lower_bound: int
    lattice_points: int
    maximal: bool
    simple_roots: bool
    distinct_moduli: bool
    tentacles_up: int
    tentacles_down: int

    def as_dict(self) -> dict:
        return asdict(self)


def component_census(eq: DifferenceEquation) -> Census:
    """Complement-component bound against the lattice points of the Newton polygon.

    ``N1``/``N2`` count the distinct root moduli of Q/P, the origin included;
    ``kappa = 1`` when a root sits at the origin, since that root does not
    produce a tentacle.  So ``N1 + N2 + 2 - kappa`` is the number of
    tentacles plus the two unbounded pieces above and below the sheet.
    """
    a, b = _full_roots(eq)
    mod_a = distinct_values([abs(r) for r in a])
    mod_b = distinct_values([abs(r) for r in b])
    kappa = int(any(r == 0 for r in a + b))
    N1, N2 = len(mod_a), len(mod_b)
    bound = N1 + N2 + 2 - kappa
    lattice = newton_polygon(eq).lattice_count()
    up, down = tentacle_abscissas(eq)
    simple = not has_repeated_root(list(a)) and not has_repeated_root(list(b))
    distinct = len(mod_a) == len(a) and len(mod_b) == len(b)
    return Census(N1, N2, kappa, bound, lattice, bound == lattice, simple, distinct,
                  len(up), len(down))


def _section_worker(args):
    eq, t, nphi = args
    s = section(eq, t, nphi)
    return s.t, s.lo, s.hi


def boundary_table(eq: DifferenceEquation, trange, nt: int, nphi: int = 1024,
                   jobs: int = 1) -> list:
    """Rows ``(t, eta_lo, eta_hi)`` on a uniform grid of ``nt`` abscissas."""
    if nt < 2 or nphi < 2:
        raise ValueError("nt and nphi must be >= 2")
    ts = np.linspace(trange[0], trange[1], nt)
    work = [(eq, float(t), nphi) for t in ts]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_section_worker, work))
    return [_section_worker(w) for w in work]


def boundary_cloud(eq: DifferenceEquation, trange, nt: int, nphi: int = 1024,
                   jobs: int = 1) -> list:
    """Boundary points ``(xi, eta)``: the two section endpoints for each abscissa."""
    pts = []
    for t, lo, hi in boundary_table(eq, trange, nt, nphi, jobs):
        pts.append((t, lo))
        pts.append((t, hi))
    return pts


def smoothness_probe(eq: DifferenceEquation, trange=(-3.0, 3.0), nt: int = 241,
                     nphi: int = 512, curvature_limit: float = 1e4) -> dict:
    """Heuristic kink detector for the section extrema ``lo(t)``, ``hi(t)``.

    Second differences divided by ``h^2`` estimate the curvature; a kink makes
    that estimate grow like ``1/h``.  Abscissas near tentacles are skipped.
    This is a diagnostic only and never decides smoothness.
    """
    rows = boundary_table(eq, trange, nt, nphi)
    ts = np.array([r[0] for r in rows])
    h = ts[1] - ts[0]
    up, down = tentacle_abscissas(eq)
    avoid = np.array(up + down)
    flagged = []
    worst = 0.0
    for col in (1, 2):
        v = np.array([r[col] for r in rows])
        for i in range(1, len(ts) - 1):
            if avoid.size and np.min(np.abs(avoid - ts[i])) < 5 * h:
                continue
            if not np.all(np.isfinite(v[i - 1:i + 2])):
                continue
            curv = abs(v[i + 1] - 2 * v[i] + v[i - 1]) / h ** 2
            worst = max(worst, curv)
            if curv > curvature_limit:
                flagged.append(float(ts[i]))
    return {"max_curvature": worst, "kinks": sorted(set(flagged)),
            "smooth_heuristic": not flagged}


def roots_of(eq: DifferenceEquation):
    """``(roots of Q, roots of P)`` as used for the amoeba."""
    a, b, _ = _root_data(eq)
    return list(a), list(b)


__all__ = [
    "AmoebaSection", "Census", "Cone", "NewtonPolygon", "amoeba_f", "boundary_cloud",
    "boundary_table", "component_census", "cone_omega", "convex_hull", "membership",
    "newton_polygon", "roots_of", "section", "smoothness_probe", "tentacle_abscissas",
    "upper_tentacle_bound", "INSIDE", "IN_E", "OTHER",
]
