"""Closed-form generating function of a Cauchy-problem solution.

For the equation ``[P(d1) d2 - Q(d1)] r = 0`` with initial data ``phi`` the
generating function ``D(z, w) = sum r(x,y) z^(-x-1) w^(-y-1)`` equals

    ( P(z) d(z) + sum_k R_{k+1}(z,w) Phi_k(w)
      - (1/w) sum_a sum_{x<a} c_{a,0} phi(x,0) z^(a-x-1) ) / (P(z) w - Q(z))

with ``d`` the row-0 series, ``Phi_k`` the column series and the boundary
polynomials ``R_{k+1} = sum_{a=k+1..m} (c_{a,1} w - c_{a,0}) z^(a-k-1)``.
The inner sum over ``a`` runs to ``m``; ``c_{m,0} = 0`` because
``deg Q < m``, so this agrees with stopping at ``m - 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np

from .algebra import Polynomial, join_terms, poly_gcd
from .cauchy import (CauchyProblem, DifferenceEquation, InitialData, riordan_initial_data,
                     solve)
from .errors import IndexOutOfRange, NonRationalInput, UnsupportedDenominator
from .laurent import LaurentTail, RationalFunction, expand_at_infinity
from .riordan import RiordanSpec, require_valid, table


class BiPoly:
    """Polynomial in ``(z, w)`` stored as ``rows[j]`` = coefficient of ``w^j`` (a poly in z)."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        rows = [r if isinstance(r, Polynomial) else Polynomial(r) for r in rows]
        while rows and rows[-1].is_zero():
            rows.pop()
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    def __reduce__(self):
        return (BiPoly, (self.rows,))

    @classmethod
    def from_z(cls, p: Polynomial) -> BiPoly:
        return cls([p])

    @classmethod
    def from_w(cls, p: Polynomial) -> BiPoly:
        return cls([Polynomial([c]) for c in p.coeffs])

    @classmethod
    def linear_w(cls, a: Polynomial, b: Polynomial) -> BiPoly:
        """``a(z) w + b(z)``."""
        return cls([b, a])

    def is_zero(self) -> bool:
        return not self.rows

    @property
    def w_degree(self) -> int:
        return len(self.rows) - 1

    @property
    def z_degree(self) -> int:
        return max((r.degree for r in self.rows), default=-1)

    def row(self, j: int) -> Polynomial:
        return self.rows[j] if 0 <= j < len(self.rows) else Polynomial()

    def coeff(self, i: int, j: int) -> Fraction:
        return self.row(j).coeff(i)

    def terms(self):
        """``(z_power, w_power, coeff)`` for the nonzero coefficients."""
        for j, r in enumerate(self.rows):
            for i, c in enumerate(r.coeffs):
                if c:
                    yield i, j, c

    def __add__(self, other: BiPoly) -> BiPoly:
        n = max(len(self.rows), len(other.rows))
        return BiPoly([self.row(j) + other.row(j) for j in range(n)])

    def __neg__(self) -> BiPoly:
        return BiPoly([-r for r in self.rows])

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, Polynomial):
            return BiPoly([r * other for r in self.rows])
        if not isinstance(other, BiPoly):
            c = Fraction(other)
            return BiPoly([r * c for r in self.rows])
        if self.is_zero() or other.is_zero():
            return BiPoly()
        out = [Polynomial()] * (len(self.rows) + len(other.rows) - 1)
        for i, a in enumerate(self.rows):
            for j, b in enumerate(other.rows):
                out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def shift_w(self, k: int) -> BiPoly:
        """Multiply by ``w^k`` (``k >= 0``)."""
        return BiPoly([Polynomial()] * k + list(self.rows))

    def column(self, i: int) -> Polynomial:
        """Coefficient of ``z^i`` as a polynomial in w."""
        return Polynomial([r.coeff(i) for r in self.rows])

    def content_z(self) -> Polynomial:
        """Monic gcd of the w-coefficients (the pure-z content)."""
        return reduce(poly_gcd, self.rows, Polynomial())

    def content_w(self) -> Polynomial:
        """Monic gcd of the z-coefficients (the pure-w content)."""
        return reduce(poly_gcd, (self.column(i) for i in range(self.z_degree + 1)),
                      Polynomial())

    def div_z(self, p: Polynomial) -> BiPoly:
        return BiPoly([r.exact_div(p) for r in self.rows])

    def div_w(self, p: Polynomial) -> BiPoly:
        cols = [self.column(i).exact_div(p) for i in range(self.z_degree + 1)]
        n = max((c.degree for c in cols), default=-1) + 1
        return BiPoly([Polynomial([c.coeff(j) for c in cols]) for j in range(n)])

    def div_linear_w(self, a: Polynomial, b: Polynomial) -> BiPoly | None:
        """Exact quotient by ``a(z) w + b(z)``, or None if it does not divide."""
        n = self.w_degree
        if n < 1:
            return None
        quot = [Polynomial()] * n
        carry = Polynomial()
        # self = (a w + b) * sum t_j w^j  =>  rows[j] = a t_{j-1} + b t_j
        for j in range(n, 0, -1):
            num = self.row(j) - carry
            t, rem = divmod(num, a)
            if not rem.is_zero():
                return None
            quot[j - 1] = t
            carry = b * t
        if self.row(0) != carry:
            return None
        return BiPoly(quot)

    def scale(self, c) -> BiPoly:
        return self * Fraction(c)

    def __call__(self, z, w):
        return sum(r(z) * w ** j for j, r in enumerate(self.rows))

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        # w-degree first, then z-degree, both descending
        for j in range(self.w_degree, -1, -1):
            for i in range(self.row(j).degree, -1, -1):
                c = self.coeff(i, j)
                if c:
                    terms.append((c, _mono(i, j)))
        return join_terms(terms)


def _mono(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("z" if i == 1 else f"z^{i}")
    if j:
        parts.append("w" if j == 1 else f"w^{j}")
    return "*".join(parts)


def _lcm_int(values) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


@dataclass(frozen=True)
class BivariateRational:
    """``num(z, w) / den(z, w)``; build with :func:`reduce_fraction` to normalize."""

    num: BiPoly
    den: BiPoly

    def __str__(self):
        num, den = str(self.num), str(self.den)
        if len(list(self.num.terms())) > 1:
            num = f"({num})"
        if len(list(self.den.terms())) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __call__(self, z, w):
        return self.num(z, w) / self.den(z, w)

    def scaled(self, c) -> BivariateRational:
        return BivariateRational(self.num.scale(c), self.den)


def reduce_fraction(num: BiPoly, den: BiPoly) -> BivariateRational:
    """Cancel common factors and normalize content.

    Pure-z and pure-w common factors are removed through gcds of contents; a
    remaining mixed factor of the denominator is cancelled when it is linear
    in w (the only kind the assembled denominators carry).  The result has
    integer coefficients with joint gcd 1 and a positive leading denominator
    coefficient (highest w power, then highest z power).
    """
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return BivariateRational(BiPoly(), BiPoly([[1]]))
    changed = True
    while changed:
        changed = False
        g = poly_gcd(num.content_z(), den.content_z())
        if g.degree >= 1:
            num, den = num.div_z(g), den.div_z(g)
            changed = True
        g = poly_gcd(num.content_w(), den.content_w())
        if g.degree >= 1:
            num, den = num.div_w(g), den.div_w(g)
            changed = True
        prim = den.div_z(den.content_z()).div_w(den.content_w())
        if prim.w_degree == 1:
            q = num.div_linear_w(prim.row(1), prim.row(0))
            if q is not None:
                num = q
                den = den.div_linear_w(prim.row(1), prim.row(0))
                changed = True
    coeffs = [c for *_, c in num.terms()] + [c for *_, c in den.terms()]
    scale = Fraction(_lcm_int(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    scale /= reduce(math.gcd, ints)
    lead = den.row(den.w_degree).leading
    if lead < 0:
        scale = -scale
    return BivariateRational(num.scale(scale), den.scale(scale))


@dataclass(frozen=True)
class ColumnGF:
    """``Phi_k(w) = U(w)/V(w) = sum_{y>=1} phi(k,y) w^(-y-1)``."""

    k: int
    U: Polynomial
    V: Polynomial

    def __post_init__(self):
        if self.V.is_zero():
            raise ZeroDivisionError("Phi_k with zero denominator")
        if not self.U.is_zero() and self.U.degree >= self.V.degree - 1:
            raise ValueError(f"Phi_{self.k} must start at w^-2 (deg U < deg V - 1)")

    def tail(self, K: int) -> LaurentTail:
        return expand_at_infinity(self.U, self.V, K)


def boundary_poly(eq: DifferenceEquation, k: int) -> BiPoly:
    """``R_{k+1}(z,w) = sum_{a=k+1..m} (c_{a,1} w - c_{a,0}) z^(a-k-1)``."""
    m = eq.m
    if not 0 <= k <= m - 1:
        raise IndexOutOfRange(f"k = {k} outside 0..{m - 1}")
    top = Polynomial([eq.P.coeff(a) for a in range(k + 1, m + 1)])
    bottom = Polynomial([eq.Q.coeff(a) for a in range(k + 1, m + 1)])
    return BiPoly.linear_w(top, -bottom)


def _row0_head(d: RationalFunction, m: int):
    return d.tail(max(m - 1, 0)).coeffs


def _correction_poly(eq: DifferenceEquation, row0) -> Polynomial:
    """``sum_{a<=m} sum_{x<a} c_{a,0} phi(x,0) z^(a-x-1)``."""
    out = [Fraction(0)] * max(eq.m, 1)
    for a in range(eq.m + 1):
        ca = eq.Q.coeff(a)
        if ca:
            for x in range(a):
                out[a - x - 1] += ca * row0[x]
    return Polynomial(out)


def assemble(eq: DifferenceEquation, d, cols, row0=None) -> BivariateRational:
    """Generating function of the solution as a reduced bivariate rational function.

    ``d`` is the row-0 generating function (a :class:`RationalFunction` or a
    ``(num, den)`` pair), ``cols`` the ``m`` column series as
    :class:`ColumnGF` or :class:`RationalFunction` in ``w``.  ``row0``, if
    given, must agree with the expansion of ``d``.
    """
    m = eq.m
    if isinstance(d, tuple):
        d = RationalFunction(*d)
    if not isinstance(d, RationalFunction):
        raise NonRationalInput("row-0 series must be a rational function of z")
    if len(cols) != m:
        raise ValueError(f"expected {m} column series, got {len(cols)}")
    gfs = []
    for k, c in enumerate(cols):
        if isinstance(c, RationalFunction):
            c = ColumnGF(k, c.num, c.den)
        if not isinstance(c, ColumnGF):
            raise NonRationalInput(f"Phi_{k} must be rational (got {type(c).__name__})")
        gfs.append(c)

    head = _row0_head(d, m)
    if row0 is not None:
        given = [Fraction(v) for v in row0]
        if list(head[: len(given)]) != given[: len(head)]:
            raise ValueError("row0 values disagree with the expansion of d")

    # clear denominators: multiply through by d_den(z) * prod V_k(w) * w
    V_all = reduce(lambda a, b: a * b, (c.V for c in gfs), Polynomial([1]))
    mult_w = BiPoly.from_w(V_all).shift_w(1)
    total = BiPoly.from_z(eq.P * d.num) * mult_w
    for k, c in enumerate(gfs):
        others = reduce(lambda a, b: a * b, (g.V for g in gfs if g is not c), Polynomial([1]))
        term = boundary_poly(eq, k) * BiPoly.from_w(c.U * others).shift_w(1)
        total = total + term * d.den
    corr = _correction_poly(eq, head)
    total = total - BiPoly.from_z(corr * d.den) * BiPoly.from_w(V_all)
    char = BiPoly.linear_w(eq.P, -eq.Q)
    den = char * BiPoly.from_z(d.den) * mult_w
    return reduce_fraction(total, den)


def riordan_columns(spec: RiordanSpec) -> list[ColumnGF]:
    """Exact ``Phi_k`` for Riordan data.

    ``phi(k, y) = 0`` for ``y > k`` (``d h^y`` starts at ``z^(-y-1)``), so
    ``Phi_k(w) = sum_{y=1..k} phi(k,y) w^(k-y) / w^(k+1)``.
    """
    m = spec.m
    init = riordan_initial_data(spec, m - 1, m - 1)
    out = []
    for k in range(m):
        vals = [init.phi(k, y) for y in range(1, k + 1)]
        U = Polynomial([vals[k - j - 1] if j < k else 0 for j in range(k + 1)])
        out.append(ColumnGF(k, U, Polynomial.monomial(k + 1)))
    return out


def assemble_riordan(spec: RiordanSpec) -> BivariateRational:
    require_valid(spec)
    d = RationalFunction(*spec.require_rational_d())
    return assemble(DifferenceEquation.from_spec(spec), d, riordan_columns(spec))


def assemble_problem(problem: CauchyProblem) -> BivariateRational:
    return assemble(problem.eq, problem.row0_gf(), problem.column_gfs())


def correction_coefficients(eq: DifferenceEquation, init: InitialData, Ymax: int):
    """Coefficients of ``w^(-j-1)``, ``j = 0..Ymax-1``, of the boundary correction.

    Each is a polynomial in z; ``Phi_k`` is read from the tables up to ``Ymax``.
    """
    m = eq.m
    parts = [boundary_poly(eq, k) for k in range(m)]
    A = [p.row(1) for p in parts]
    B = [-p.row(0) for p in parts]
    corr = _correction_poly(eq, [init.phi(x, 0) for x in range(m)])
    out = []
    for j in range(Ymax):
        c = Polynomial()
        for k in range(m):
            c = c + A[k] * init.phi(k, j + 1)
            if j >= 1:
                c = c - B[k] * init.phi(k, j)
        if j == 0:
            c = c - corr
        out.append(c)
    return out


def correction_is_zero(eq: DifferenceEquation, data, Ymax: int = 8) -> bool:
    """True iff the boundary correction vanishes to depth ``Ymax``.

    ``data`` is a :class:`RiordanSpec` (its own initial data are used) or an
    explicit :class:`InitialData`.
    """
    if isinstance(data, RiordanSpec):
        data = riordan_initial_data(data, max(eq.m, 1), Ymax)
    return all(c.is_zero() for c in correction_coefficients(eq, data, Ymax))


def series_of(gf: BivariateRational, xmax: int, ymax: int) -> np.ndarray:
    """Coefficients ``r(x, y)`` of ``gf`` at infinity, indexed ``[x, y]``.

    The denominator must be ``w^s (D1(z) w - D0(z))``; then with
    ``num = sum_i N_i(z) w^i`` (``i <= s``) the coefficient of ``w^(-y-1)`` is
    ``sum_i N_i D0^(y+i-s) D1^(s-i) / D1^(y+1)``, expanded in z.
    """
    den = gf.den
    s = 0
    while s < len(den.rows) and den.rows[s].is_zero():
        s += 1
    lin = BiPoly(den.rows[s:])
    if lin.w_degree != 1:
        raise UnsupportedDenominator(
            f"denominator {den} is not of the form w^s (D1(z) w - D0(z))")
    D1, D0 = lin.row(1), -lin.row(0)
    num = gf.num
    if num.w_degree > s:
        raise UnsupportedDenominator("numerator w-degree exceeds the w^s factor: "
                                     "the series has nonnegative powers of w")
    out = np.empty((xmax + 1, ymax + 1), dtype=object)
    D0_pows = [Polynomial([1])]
    for _ in range(ymax + s + 1):
        D0_pows.append(D0_pows[-1] * D0)
    D1_pows = [Polynomial([1])]
    for _ in range(ymax + s + 2):
        D1_pows.append(D1_pows[-1] * D1)
    for y in range(ymax + 1):
        acc = Polynomial()
        for i, Ni in enumerate(num.rows):
            k = y + i - s
            if k < 0 or Ni.is_zero():
                continue
            acc = acc + Ni * D0_pows[k] * D1_pows[s - i]
        out[:, y] = expand_at_infinity(acc, D1_pows[y + 1], xmax).coeffs
    return out


def verify_identity(gf: BivariateRational, r: np.ndarray) -> bool:
    """Check ``den * D == num`` coefficientwise wherever the window suffices.

    The coefficient of ``z^e w^f`` in ``den * D`` is
    ``sum den_{a,b} r(a-e-1, b-f-1)``; it must equal ``num_{e,f}`` for
    ``e, f >= 0`` and vanish for negative exponents.
    """
    xmax, ymax = r.shape[0] - 1, r.shape[1] - 1
    dterms = list(gf.den.terms())
    amax = max(a for a, _, _ in dterms)
    bmax = max(b for _, b, _ in dterms)
    for e in range(amax - 1 - xmax, amax):
        for f in range(bmax - 1 - ymax, bmax):
            acc = Fraction(0)
            for a, b, c in dterms:
                x, y = a - e - 1, b - f - 1
                if x >= 0 and y >= 0:
                    acc += c * r[x, y]
            target = gf.num.coeff(e, f) if e >= 0 and f >= 0 else 0
            if acc != target:
                return False
    return True


def riordan_gf_reference(spec: RiordanSpec) -> BivariateRational:
    """``P d / (P w - Q)``, the simplified form when the correction vanishes."""
    num, den = spec.require_rational_d()
    return reduce_fraction(BiPoly.from_z(spec.P * num),
                           BiPoly.linear_w(spec.P, -spec.Q) * BiPoly.from_z(den))


def triple_check(spec: RiordanSpec, xmax: int, ymax: int):
    """Residue table, recursion and series of the closed form on one window."""
    eq = DifferenceEquation.from_spec(spec)
    a = table(spec, xmax, ymax)
    b = solve(eq, riordan_initial_data(spec, xmax, ymax), xmax, ymax)
    c = series_of(assemble_riordan(spec), xmax, ymax)
    return a, b, c
