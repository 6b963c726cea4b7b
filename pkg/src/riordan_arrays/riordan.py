"""Rational Riordan arrays and their entries by the residue formula.

The array attached to ``d(z)`` and ``h(z) = Q(z)/P(z)`` is

    r(x, y) = Res{ d(z) h(z)^y z^x },

where ``Res`` reads off the coefficient of ``z^-1`` of a series at infinity.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import Polynomial, distinct_values, poly_roots
from .errors import InvalidSpec, NonRationalInput
from .laurent import LaurentTail, expand_at_infinity, res, tail_mul, tail_pow


@dataclass(frozen=True)
class RiordanSpec:
    """``d = d_num/d_den`` and ``h = Q/P``.

    ``d_series`` is an escape hatch for formal (non-rational) ``d``: build it
    with :meth:`from_series`.  Such specs only support the residue formula and
    the recursion; the closed forms and asymptotics need rational ``d``.
    """

    P: Polynomial
    Q: Polynomial
    d_num: Polynomial | None = None
    d_den: Polynomial | None = None
    d_series: LaurentTail | None = field(default=None, compare=False)

    @classmethod
    def from_series(cls, P, Q, d_series: LaurentTail) -> RiordanSpec:
        return cls(P=P, Q=Q, d_series=d_series)

    @property
    def m(self) -> int:
        return self.P.degree

    @property
    def is_rational(self) -> bool:
        return self.d_series is None

    def require_rational_d(self):
        if not self.is_rational:
            raise NonRationalInput("this operation needs d(z) as a rational function")
        return self.d_num, self.d_den

    def d_expansion(self, K: int) -> LaurentTail:
        if self.d_series is not None:
            return self.d_series.truncate(K)
        return expand_at_infinity(self.d_num, self.d_den, K)

    def h_expansion(self, K: int) -> LaurentTail:
        return expand_at_infinity(self.Q, self.P, K)

    def d_value(self, z: complex) -> complex:
        num, den = self.require_rational_d()
        return num(z) / den(z)


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def as_dict(self) -> dict:
        return {"valid": self.ok, "violations": list(self.violations),
                "warnings": list(self.warnings)}


def validate(spec: RiordanSpec) -> ValidationReport:
    report = ValidationReport()
    v = report.violations
    P, Q = spec.P, spec.Q
    if P.degree < 1:
        v.append("deg P >= 1 required (m = deg P must be positive)")
    if Q.is_zero():
        v.append("Q must be nonzero (h = 0 gives a degenerate characteristic polynomial)")
    elif Q.degree >= P.degree:
        v.append(f"deg Q < deg P required (deg Q = {Q.degree}, deg P = {P.degree})")
    if spec.d_series is None:
        if spec.d_num is None or spec.d_den is None:
            v.append("d requires both d_num and d_den")
        elif spec.d_den.is_zero():
            v.append("d_den must be nonzero")
        elif not spec.d_num.is_zero() and spec.d_num.degree >= spec.d_den.degree:
            v.append(f"deg d_num < deg d_den required (got {spec.d_num.degree} >= "
                     f"{spec.d_den.degree})")
    if report.ok and spec.is_rational and spec.d_den.degree >= 1:
        # d should only be singular where h is; warn, never reject
        known = []
        for poly in (P, Q):
            if poly.degree >= 1:
                known.extend(poly_roots(poly))
        for r in distinct_values(poly_roots(spec.d_den)):
            if not any(abs(r - k) <= 1e-9 * (1 + abs(k)) for k in known):
                report.warnings.append(
                    f"d has a pole at {r:.6g} which is not a root of P or Q")
    return report


def require_valid(spec: RiordanSpec) -> RiordanSpec:
    report = validate(spec)
    if not report.ok:
        raise InvalidSpec("; ".join(report.violations))
    return spec


def is_proper(spec: RiordanSpec) -> bool:
    return spec.Q.degree + 1 == spec.P.degree


def _column(d: LaurentTail, h: LaurentTail, y: int) -> LaurentTail:
    if y == 0:
        return d
    return tail_mul(d, tail_pow(h, y))


def entry(spec: RiordanSpec, x: int, y: int) -> Fraction:
    """``r(x, y) = Res{ d h^y z^x }`` exactly."""
    if x < 0 or y < 0:
        raise ValueError("indices must be nonnegative")
    d = spec.d_expansion(x)
    if y == 0:
        return res(d, x)
    return res(_column(d, spec.h_expansion(x), y), x)


def _row_worker(args):
    d, h, y = args
    return _column(d, h, y).coeffs


def table(spec: RiordanSpec, xmax: int, ymax: int, jobs: int = 1) -> np.ndarray:
    """Entries ``r(x, y)``, ``0 <= x <= xmax``, ``0 <= y <= ymax``; indexed ``[x, y]``.

    One expansion of ``d`` and ``h`` to order ``xmax`` is shared by all
    columns.  With ``jobs > 1`` each power ``h^y`` is formed independently in
    a process pool; the result is identical.
    """
    d = spec.d_expansion(xmax)
    h = spec.h_expansion(xmax)
    out = np.empty((xmax + 1, ymax + 1), dtype=object)
    if jobs > 1 and ymax > 0:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cols = list(pool.map(_row_worker, [(d, h, y) for y in range(ymax + 1)]))
    else:
        cols, col = [], d
        for y in range(ymax + 1):
            if y:
                col = tail_mul(col, h)
            cols.append(col.coeffs)
    for y, c in enumerate(cols):
        out[:, y] = c
    return out
