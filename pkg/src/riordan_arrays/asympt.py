"""Diagonal asymptotics of rational Riordan arrays.

Along a direction ``(x, y) = lambda (p, q)`` inside the cone of the vertex
``(m, 1)``, the entries behave like

    r(lambda p, lambda q) ~ d(z0) / sqrt(2 pi lambda q H(z0)) * (z0^p w0^q)^lambda

where ``(z0, w0)`` is the critical point of ``R = P w - Q`` for that direction
whose log-image lies on the boundary of ``E_(m,1)``.  With ``mu = p/q`` the
critical point solves ``z (P'/P - Q'/Q) = mu``, or without denominators

    q z (P' Q - Q' P) - p P Q = 0,    w0 = Q(z0) / P(z0),

and ``H = Q''/Q - P''/P + 2 mu P'/(z P) - mu (1 + mu)/z^2``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Polynomial, distinct_values, has_repeated_root, poly_roots
from .amoeba import (
    cone_omega,
    newton_polygon,
    reduced_pair,
    roots_of,
    section,
    upper_tentacle_bound,
)
from .cauchy import DifferenceEquation, riordan_initial_data, solve
from .errors import (
    DirectionOutsideCone,
    EmptyCandidateSet,
    NegativeHessian,
    NoBoundaryCandidate,
    PoleAtSaddle,
)
from .riordan import RiordanSpec, require_valid

BOUNDARY_TOL = 1e-6
POLE_TOL = 1e-12


@dataclass(frozen=True)
class Direction:
    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("direction components must be integers")
        if self.p < 1 or self.q < 1:
            raise ValueError("direction components must be >= 1")

    @property
    def gcd(self) -> int:
        return math.gcd(self.p, self.q)

    def reduced(self) -> Direction:
        g = self.gcd
        return Direction(self.p // g, self.q // g)

    @property
    def mu(self) -> Fraction:
        return Fraction(self.p, self.q)


@dataclass
class SaddleResult:
    z0: complex
    w0: complex
    H: complex
    on_boundary: bool
    diagnostics: dict = field(default_factory=dict)


def saddle_polynomial(eq: DifferenceEquation, dir: Direction) -> Polynomial:
    d = dir.reduced()
    P, Q = reduced_pair(eq)
    return Polynomial.monomial(1) * (P.derivative() * Q - Q.derivative() * P) * d.q \
        - P * Q * d.p


def _small(v: complex, scale: float = 1.0) -> bool:
    return abs(v) <= POLE_TOL * max(1.0, scale)


def saddle_candidates(eq: DifferenceEquation, dir: Direction) -> list:
    """Critical points ``(z0, w0)`` with ``P(z0) Q(z0) != 0``; one per distinct root."""
    poly = saddle_polynomial(eq, dir)
    if poly.is_zero() or poly.degree < 1:
        raise EmptyCandidateSet(f"saddle system for {dir} has no finite solutions")
    out = []
    for z in distinct_values(poly_roots(poly)):
        pz, qz = eq.P(z), eq.Q(z)
        if _small(pz) or _small(qz) or z == 0:
            continue
        out.append((complex(z), complex(qz / pz)))
    if not out:
        raise EmptyCandidateSet(f"all critical points for {dir} sit on poles or zeros")
    return out


def saddle_residuals(eq: DifferenceEquation, z0: complex, w0: complex, dir: Direction):
    """``(|R(z0, w0)|, |z0 (P'/P - Q'/Q) - mu|)``: both vanish at a critical point."""
    d = dir.reduced()
    pz, qz = eq.P(z0), eq.Q(z0)
    r1 = abs(pz * w0 - qz)
    r2 = abs(z0 * (eq.P.derivative()(z0) / pz - eq.Q.derivative()(z0) / qz) - d.p / d.q)
    return r1, r2


def hessian_H(eq: DifferenceEquation, z0, dir: Direction):
    """``H(z0) = Q''/Q - P''/P + 2 mu P'/(z P) - mu (1 + mu)/z^2``.

    This is ``S''(z0) / q`` for ``S = q log h + p log z``, the phase whose
    critical point is the saddle.
    """
    d = dir.reduced()
    mu = d.p / d.q
    z = complex(z0)
    pz, qz = eq.P(z), eq.Q(z)
    if _small(z) or _small(pz) or _small(qz):
        raise PoleAtSaddle(f"H has a pole at z0 = {z0}")
    P1, P2 = eq.P.derivative(), eq.P.derivative(2)
    Q2 = eq.Q.derivative(2)
    H = Q2(z) / qz - P2(z) / pz + 2 * mu * P1(z) / (z * pz) - mu * (1 + mu) / z ** 2
    return H.real if H.imag == 0 else H


def _is_real_positive(z: complex) -> bool:
    return z.real > 0 and abs(z.imag) <= 1e-12 * (1 + abs(z))


def _growth(c, d: Direction) -> float:
    z0, w0 = c
    return d.p * math.log(abs(z0)) + d.q * math.log(abs(w0))


def select_dominant(eq: DifferenceEquation, candidates, dir: Direction,
                    nphi: int = 1024) -> SaddleResult:
    """Pick the candidate whose log-image lies on the boundary of ``E_(m,1)``.

    On the boundary means right of every upward tentacle and with
    ``log|w0|`` equal to the top of the amoeba section at ``log|z0|``.
    Ties prefer a real positive ``z0``, then the largest ``|z0^p w0^q|``.
    A lone candidate is returned as is, with ``on_boundary`` reporting the test.
    """
    d = dir.reduced()
    if not candidates:
        raise EmptyCandidateSet("no candidates to select from")
    bound = upper_tentacle_bound(eq)
    rows = []
    for z0, w0 in candidates:
        xi, eta = math.log(abs(z0)), math.log(abs(w0))
        hi = section(eq, xi, nphi).hi
        ok = bool(xi > bound and abs(eta - hi) <= BOUNDARY_TOL)
        rows.append({"z0": z0, "w0": w0, "xi": xi, "eta": eta, "section_hi": hi,
                     "on_boundary": ok})
    a, b = roots_of(eq)
    diag = {
        "candidates": rows,
        "simple_roots": not has_repeated_root(a) and not has_repeated_root(b),
        "distinct_moduli": len(distinct_values([abs(r) for r in a])) == len(a)
        and len(distinct_values([abs(r) for r in b])) == len(b),
        "warnings": [],
    }
    try:
        diag["in_cone"] = cone_omega(newton_polygon(eq)).contains_interior(d.p, d.q)
    except Exception as exc:  # degenerate hull; reported, not fatal here
        diag["in_cone"] = False
        diag["warnings"].append(str(exc))

    if len(rows) == 1:
        pick = rows[0]
    else:
        passing = [r for r in rows if r["on_boundary"]]
        if not passing:
            raise NoBoundaryCandidate(
                f"none of {len(rows)} critical points for {d} lies on the boundary of E_(m,1)",
                diag)
        if len(passing) > 1:
            diag["warnings"].append(f"{len(passing)} candidates pass the boundary test")
        passing.sort(key=lambda r: (not _is_real_positive(r["z0"]),
                                    -_growth((r["z0"], r["w0"]), d)))
        pick = passing[0]
    z0, w0 = pick["z0"], pick["w0"]
    if _is_real_positive(z0):
        z0 = complex(z0.real, 0.0)
        w0 = complex(w0.real, 0.0)
    diag["residuals"] = saddle_residuals(eq, z0, w0, d)
    H = hessian_H(eq, z0, d)
    return SaddleResult(z0, w0, H, pick["on_boundary"], diag)


def dominant_saddle(eq: DifferenceEquation, dir: Direction) -> SaddleResult:
    return select_dominant(eq, saddle_candidates(eq, dir), dir)


def _check_cone(eq: DifferenceEquation, d: Direction):
    cone = cone_omega(newton_polygon(eq))
    if not cone.contains_interior(d.p, d.q):
        g1, g2 = cone.generators
        raise DirectionOutsideCone(
            f"direction ({d.p},{d.q}) is not interior to the cone spanned by {g1} and {g2}")


def log_estimate(spec: RiordanSpec, dir: Direction, lam: float,
                 result: SaddleResult | None = None) -> complex:
    """Principal-branch log of the leading-order estimate of ``r(lam p, lam q)``.

    A non-reduced direction ``(g p', g q')`` is treated as ``(p', q')`` at
    ``g lam``.
    """
    if lam < 1:
        raise ValueError("lambda must be >= 1")
    require_valid(spec)
    spec.require_rational_d()
    eq = DifferenceEquation.from_spec(spec)
    d = dir.reduced()
    lam = lam * dir.gcd
    _check_cone(eq, d)
    if result is None:
        result = dominant_saddle(eq, d)
    if not result.on_boundary:
        raise NoBoundaryCandidate("the only critical point is off the boundary of E_(m,1)",
                                  result.diagnostics)
    H = complex(result.H)
    if (lam * d.q * H).real <= 0:
        raise NegativeHessian(f"Re(lambda q H) = {(lam * d.q * H).real:.6g} <= 0")
    dz = complex(spec.d_value(result.z0))
    if dz == 0:
        return complex(-math.inf)
    z0, w0 = result.z0, result.w0
    return (cmath.log(dz) - 0.5 * cmath.log(2 * math.pi * lam * d.q * H)
            + lam * (d.p * cmath.log(z0) + d.q * cmath.log(w0)))


def estimate(spec: RiordanSpec, dir: Direction, lam: float,
             result: SaddleResult | None = None) -> float:
    """Leading-order value of ``r(lam p, lam q)`` (real part)."""
    lv = log_estimate(spec, dir, lam, result)
    if lv.real == -math.inf:
        return 0.0
    try:
        return cmath.exp(lv).real
    except OverflowError:
        return math.copysign(math.inf, math.cos(lv.imag))


@dataclass
class ProbeRow:
    lam: int
    exact: Fraction
    estimate: float
    ratio: float


def _log_abs(x: Fraction) -> float:
    return math.log(abs(x.numerator)) - math.log(x.denominator)


def convergence_probe(spec: RiordanSpec, dir: Direction, lambdas) -> list[ProbeRow]:
    """Exact entries against the estimate; ``ratio = exact / estimate`` in the log domain.

    All exact values come from one recursion table sized for the largest lambda.
    """
    lambdas = sorted(set(int(v) for v in lambdas))
    if not lambdas or lambdas[0] < 1:
        raise ValueError("lambdas must be integers >= 1")
    eq = DifferenceEquation.from_spec(require_valid(spec))
    d = dir.reduced()
    scale = dir.gcd
    _check_cone(eq, d)
    result = dominant_saddle(eq, d)
    top = lambdas[-1] * scale
    xmax, ymax = top * d.p, top * d.q
    table = solve(eq, riordan_initial_data(spec, xmax, ymax), xmax, ymax)
    rows = []
    for lam in lambdas:
        L = lam * scale
        exact = table[L * d.p, L * d.q]
        lv = log_estimate(spec, d, L, result)
        est = estimate(spec, d, L, result)
        if lv.real == -math.inf or math.cos(lv.imag) == 0:
            ratio = math.nan
        elif exact == 0:
            ratio = 0.0
        else:
            ratio = math.exp(_log_abs(exact) - lv.real) / math.cos(lv.imag)
            if exact < 0:
                ratio = -ratio
        rows.append(ProbeRow(lam, exact, est, ratio))
    return rows
