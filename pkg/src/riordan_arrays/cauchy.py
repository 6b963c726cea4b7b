"""The Cauchy problem for ``[P(d1) d2 - Q(d1)] r = 0``.

``d1``, ``d2`` are the shifts in ``x`` and ``y``.  With ``m = deg P`` the
equation reads

    sum_a c_{a,1} r(x+a, y+1) = sum_a c_{a,0} r(x+a, y)

where ``P = sum c_{a,1} z^a`` and ``Q = sum c_{a,0} z^a``.  Initial data live
on ``X_(m,1) = {(x, y) >= 0 : not (x >= m and y >= 1)}``: the whole row
``y = 0`` plus the columns ``x = 0 .. m-1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import Polynomial
from .errors import IllPosed, InsufficientInitialData, NonRationalInput
from .laurent import RationalFunction, tail_mul
from .riordan import RiordanSpec, require_valid


@dataclass(frozen=True)
class DifferenceEquation:
    """Coefficients of P (the ``c_{a,1}``) and Q (the ``c_{a,0}``)."""

    P: Polynomial
    Q: Polynomial

    @classmethod
    def from_spec(cls, spec) -> DifferenceEquation:
        return cls(spec.P, spec.Q)

    @property
    def m(self) -> int:
        return self.P.degree

    def support(self) -> dict:
        """Nonzero coefficients of ``R(z, w) = P(z) w - Q(z)`` keyed by ``(a, b)``."""
        out = {}
        for a, c in enumerate(self.P.coeffs):
            if c:
                out[(a, 1)] = c
        for a, c in enumerate(self.Q.coeffs):
            if c:
                out[(a, 0)] = -c
        return out


@dataclass(frozen=True)
class InitialData:
    """Finite tables of the data on ``X_(m,1)``.

    ``row0[x] = phi(x, 0)`` and ``cols[k][y-1] = phi(k, y)`` for ``y >= 1``.
    """

    row0: tuple
    cols: tuple

    def __post_init__(self):
        object.__setattr__(self, "row0", tuple(Fraction(v) for v in self.row0))
        object.__setattr__(self, "cols", tuple(tuple(Fraction(v) for v in c)
                                               for c in self.cols))

    def phi(self, x: int, y: int) -> Fraction:
        try:
            if y == 0:
                return self.row0[x]
            return self.cols[x][y - 1]
        except IndexError:
            raise InsufficientInitialData(f"no initial value phi({x}, {y})") from None


@dataclass
class WellPosedReport:
    ok: bool
    messages: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def well_posed(eq: DifferenceEquation) -> WellPosedReport:
    """Newton polygon of ``R = P w - Q`` inside the box ``Pi_(m,1)``, ``c_{m,1} != 0``."""
    msgs = []
    ok = True
    m = eq.m
    if eq.P.is_zero() or m < 1:
        return WellPosedReport(False, ["P must have degree m >= 1"])
    support = eq.support()
    outside = sorted(pt for pt in support if pt[0] > m or pt[1] > 1)
    if outside:
        ok = False
        msgs.append(f"support points {outside} lie outside the box Pi_({m},1)")
    if not eq.Q.is_zero() and eq.Q.degree >= m:
        ok = False
        msgs.append(f"deg Q = {eq.Q.degree} >= m = {m}: (m,1) is not the corner of the "
                    f"Newton polygon, so X_(m,1) does not determine a solution")
    if ok:
        msgs.append(f"Newton polygon lies in Pi_({m},1) with c_({m},1) = {eq.P.leading} != 0 "
                    f"as a vertex; for R = P w - Q this is exactly deg Q < deg P")
    return WellPosedReport(ok, msgs)


def _integral(values) -> bool:
    return all(v.denominator == 1 for v in values)


def solve(eq: DifferenceEquation, init: InitialData, xmax: int, ymax: int) -> np.ndarray:
    """Fill the window ``[0..xmax] x [0..ymax]`` by the recursion; indexed ``[x, y]``.

    For ``y >= 1``, ``x >= m``:
    ``r(x,y) = (sum c_{a,0} r(x-m+a, y-1) - sum_{a<m} c_{a,1} r(x-m+a, y)) / c_{m,1}``.
    """
    report = well_posed(eq)
    if not report:
        raise IllPosed("; ".join(report.messages))
    m = eq.m
    lead = eq.P.leading
    p_terms = [(a, c) for a, c in enumerate(eq.P.coeffs[:m]) if c]
    q_terms = [(a, c) for a, c in enumerate(eq.Q.coeffs) if c]

    # plain ints are several times faster than Fractions on big tables
    used = [init.phi(x, 0) for x in range(xmax + 1)]
    used += [init.phi(k, y) for k in range(min(m, xmax + 1)) for y in range(1, ymax + 1)]
    coeffs = [c for _, c in p_terms + q_terms]
    use_int = _integral(used) and _integral(coeffs) and abs(lead) == 1
    conv = int if use_int else Fraction
    if use_int:
        p_terms = [(a, int(c)) for a, c in p_terms]
        q_terms = [(a, int(c)) for a, c in q_terms]
        lead = int(lead)

    cols = [[conv(0)] * (ymax + 1) for _ in range(xmax + 1)]
    for x in range(xmax + 1):
        cols[x][0] = conv(init.phi(x, 0))
    for k in range(min(m, xmax + 1)):
        for y in range(1, ymax + 1):
            cols[k][y] = conv(init.phi(k, y))
    for y in range(1, ymax + 1):
        for x in range(m, xmax + 1):
            base = x - m
            acc = conv(0)
            for a, c in q_terms:
                acc += c * cols[base + a][y - 1]
            for a, c in p_terms:
                acc -= c * cols[base + a][y]
            cols[x][y] = acc * lead if use_int else acc / lead
    out = np.empty((xmax + 1, ymax + 1), dtype=object)
    for x in range(xmax + 1):
        out[x, :] = [Fraction(v) for v in cols[x]] if use_int else cols[x]
    return out


def riordan_initial_data(spec: RiordanSpec, Xmax: int, Ymax: int) -> InitialData:
    """``phi(x, y) = Res{ d h^y z^x }`` on the initial set, from shared expansions."""
    require_valid(spec)
    m = spec.m
    row0 = spec.d_expansion(Xmax).coeffs
    K = m - 1
    d = spec.d_expansion(K)
    h = spec.h_expansion(K)
    cols = [[] for _ in range(m)]
    col = d
    for _ in range(Ymax):
        col = tail_mul(col, h)
        for k in range(m):
            cols[k].append(col.coeffs[k])
    return InitialData(row0, cols)


def residual(eq: DifferenceEquation, r: np.ndarray) -> Fraction:
    """Largest ``|sum c_{a,1} r(x+a,y+1) - sum c_{a,0} r(x+a,y)|`` over the window."""
    xmax, ymax = r.shape[0] - 1, r.shape[1] - 1
    m = eq.m
    worst = Fraction(0)
    for y in range(ymax):
        for x in range(xmax - m + 1):
            lhs = sum((c * r[x + a, y + 1] for a, c in enumerate(eq.P.coeffs)), Fraction(0))
            lhs -= sum((c * r[x + a, y] for a, c in enumerate(eq.Q.coeffs)), Fraction(0))
            worst = max(worst, abs(lhs))
    return worst


class CauchyProblem:
    """Equation plus initial data, each part either a finite table or a rational GF.

    ``row0`` is a sequence ``phi(0,0), phi(1,0), ...`` or a
    :class:`RationalFunction` in ``z`` equal to ``sum_x phi(x,0) z^(-x-1)``.
    ``cols[k]`` is a sequence ``phi(k,1), phi(k,2), ...`` or a rational
    function in ``w`` equal to ``Phi_k(w) = sum_{y>=1} phi(k,y) w^(-y-1)``.
    """

    def __init__(self, P: Polynomial, Q: Polynomial, row0, cols):
        self.eq = DifferenceEquation(P, Q)
        self.row0 = row0 if isinstance(row0, RationalFunction) else tuple(map(Fraction, row0))
        self.cols = [c if isinstance(c, RationalFunction) else tuple(map(Fraction, c))
                     for c in cols]
        if len(self.cols) != self.eq.m:
            raise ValueError(f"expected {self.eq.m} initial columns, got {len(self.cols)}")
        for k, c in enumerate(self.cols):
            # Phi_k starts at w^-2 because the column sum starts at y = 1
            if isinstance(c, RationalFunction) and c.tail(0).coeffs[0] != 0:
                raise ValueError(f"Phi_{k}(w) must have no w^-1 term")

    @property
    def P(self):
        return self.eq.P

    @property
    def Q(self):
        return self.eq.Q

    @property
    def is_rational(self) -> bool:
        return isinstance(self.row0, RationalFunction) and all(
            isinstance(c, RationalFunction) for c in self.cols)

    def row0_gf(self) -> RationalFunction:
        if not isinstance(self.row0, RationalFunction):
            raise NonRationalInput("row 0 is given as a finite table, not a rational GF")
        return self.row0

    def column_gfs(self) -> list[RationalFunction]:
        for k, c in enumerate(self.cols):
            if not isinstance(c, RationalFunction):
                raise NonRationalInput(f"column {k} is given as a finite table, "
                                       f"not a rational GF")
        return list(self.cols)

    def initial_data(self, Xmax: int, Ymax: int) -> InitialData:
        if isinstance(self.row0, RationalFunction):
            row0 = self.row0.tail(Xmax).coeffs
        else:
            row0 = self.row0
        cols = []
        for c in self.cols:
            if isinstance(c, RationalFunction):
                cols.append(c.tail(Ymax).coeffs[1:])
            else:
                cols.append(c)
        return InitialData(row0, cols)

    def solve(self, xmax: int, ymax: int) -> np.ndarray:
        return solve(self.eq, self.initial_data(xmax, ymax), xmax, ymax)
