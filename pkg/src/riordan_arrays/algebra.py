"""Univariate polynomials with exact rational coefficients.

Coefficients are :class:`fractions.Fraction` values stored in ascending order
of the power of ``z``; the zero polynomial has an empty coefficient tuple and
degree -1.  Exact evaluation is available for rational arguments, double
precision (Horner) evaluation for everything else.  Complex roots are found by
Aberth-Ehrlich simultaneous iteration followed by Newton polishing.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import NonConvergence, ZeroPolynomial

# Two roots r1, r2 are treated as equal when |r1 - r2| <= ROOT_TOL * (1 + |r1|);
# moduli are grouped with the same rule.
ROOT_TOL = 1e-9
RESIDUAL_TOL = 1e-12
MAX_SWEEPS = 1000
CLUSTER_TOL = 1e-4

_EPS = np.finfo(float).eps


def rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError(f"non-finite coefficient {value!r}")
    return Fraction(value)


class Polynomial:
    """Immutable polynomial ``sum(coeffs[i] * z**i)`` over the rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self._coeffs,))

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, power: int, c=1) -> Polynomial:
        return cls([0] * power + [c])

    @classmethod
    def from_roots(cls, roots, leading=1) -> Polynomial:
        out = cls([leading])
        for r in roots:
            out = out * cls([-r, 1])
        return out

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            return Fraction(0)
        return self._coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def valuation(self) -> int:
        """Multiplicity of the root z = 0 (-1 for the zero polynomial)."""
        for i, c in enumerate(self._coeffs):
            if c != 0:
                return i
        return -1

    # arithmetic ---------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Rational, str)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out, base = Polynomial([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            quot[i - dq] = c
            if c:
                for j, oc in enumerate(other._coeffs):
                    rem[i - dq + j] -= c * oc
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Polynomial:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        lead = self.leading
        return Polynomial([c / lead for c in self._coeffs])

    def derivative(self, order: int = 1) -> Polynomial:
        cs = self._coeffs
        for _ in range(order):
            cs = tuple(i * c for i, c in enumerate(cs))[1:]
        return Polynomial(cs)

    # evaluation ----------------------------------------------------------
    def __call__(self, z):
        """Horner evaluation; exact for rational ``z``, complex otherwise."""
        if isinstance(z, (int, Rational)):
            acc = Fraction(0)
            for c in reversed(self._coeffs):
                acc = acc * z + c
            return acc
        z = complex(z)
        acc = 0j
        for c in reversed(self._coeffs):
            acc = acc * z + float(c)
        return acc

    def as_floats(self) -> np.ndarray:
        return np.array([float(c) for c in self._coeffs], dtype=float)

    # comparison / display -----------------------------------------------
    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self._coeffs]})"

    def __str__(self):
        return format_poly(self, "z")


def format_poly(p: Polynomial, var: str = "z") -> str:
    """Human readable form, highest power first, e.g. ``z^2 - z - 1``."""
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if c:
            terms.append((c, _monomial(var, i)))
    return join_terms(terms)


def _monomial(var: str, i: int) -> str:
    if i == 0:
        return ""
    if i == 1:
        return var
    return f"{var}^{i}"


def join_terms(terms) -> str:
    """Join ``(coefficient, monomial)`` pairs into ``a*m1 - b*m2 + c`` form."""
    out = []
    for k, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        elif a.denominator == 1:
            body = f"{a}*{mono}"
        else:
            body = f"({a})*{mono}"
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# module-level operations ---------------------------------------------------

def poly_arith(a: Polynomial, b: Polynomial, kind: str) -> Polynomial:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown kind {kind!r}")


def poly_derivative(a: Polynomial, order: int = 1) -> Polynomial:
    return a.derivative(order)


def poly_eval(a: Polynomial, z) -> complex:
    """Double precision evaluation at a complex point."""
    return a(complex(z))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def exact_abs_residual(a: Polynomial, z: complex) -> float:
    """|a(z)| with the polynomial evaluated exactly at the float point z."""
    x, y = Fraction(z.real), Fraction(z.imag)
    re, im = Fraction(0), Fraction(0)
    for c in reversed(a.coeffs):
        re, im = re * x - im * y + c, re * y + im * x
    return math.hypot(float(re), float(im))


def _horner2(c: np.ndarray, z: np.ndarray):
    """Values of the polynomial and its derivative (c descending)."""
    p = np.full_like(z, c[0])
    dp = np.zeros_like(z)
    for ck in c[1:]:
        dp = dp * z + p
        p = p * z + ck
    return p, dp


def _aberth(c_desc: np.ndarray, max_sweeps: int):
    n = len(c_desc) - 1
    monic = c_desc / c_desc[0]
    # Fujiwara bound: every root lies in |z| <= 2 max |c_{n-k}/c_n|^(1/k)
    bound = 2 * max(abs(monic[k]) ** (1.0 / k) for k in range(1, n + 1))
    radius = max(bound / 2, 1e-3)
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        p, dp = _horner2(c_desc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            s = (1.0 / diff).sum(axis=1) - 1.0
            step = ratio / (1.0 - ratio * s)
        step = np.where(np.isfinite(step), step, 0.0)
        step = np.where(p == 0, 0.0, step)
        z = z - step
        if np.all(np.abs(step) <= 4 * _EPS * (1 + np.abs(z))):
            break
    return z, sweeps


def _merge_clusters(a: Polynomial, found: list) -> list:
    """Replace a tight cluster of k roots by one k-fold root.

    A k-fold root is only resolved to about eps^(1/k) by the iteration, but it
    is a simple root of the (k-1)-th derivative, where Newton converges to full
    precision.  The merged value is kept only if its residual is no worse.
    """
    out = list(found)
    used = [False] * len(out)
    for i, r in enumerate(found):
        if used[i]:
            continue
        group = [j for j in range(len(found))
                 if not used[j] and abs(found[j] - r) <= CLUSTER_TOL * (1 + abs(r))]
        k = len(group)
        for j in group:
            used[j] = True
        if k < 2 or k > a.degree:
            continue
        d, dd = a.derivative(k - 1), a.derivative(k)
        c = sum(found[j] for j in group) / k
        for _ in range(50):
            dv = dd(c)
            if dv == 0:
                break
            step = d(c) / dv
            c -= step
            if abs(step) <= 2 * _EPS * (1 + abs(c)):
                break
        if abs(c.imag) <= 4 * _EPS * abs(c.real):
            c = complex(c.real, 0.0)
        worst = max(exact_abs_residual(a, found[j]) for j in group)
        if exact_abs_residual(a, c) <= worst:
            for j in group:
                out[j] = c
    return out


def poly_roots(a: Polynomial, max_sweeps: int = MAX_SWEEPS) -> list[complex]:
    """All complex roots of ``a`` with multiplicity.

    Roots at the origin are split off exactly.  The remaining factor is solved
    by Aberth iteration; each root is then Newton-polished and its residual
    checked by exact evaluation at the returned float point.  The residual
    target is ``1e-12 * (1 + max|coeff|)`` or, when that is below what double
    precision can represent near the root, the rounding floor
    ``4 n eps sum |c_i| |r|^i``.
    """
    if a.is_zero():
        raise ZeroPolynomial("cannot take roots of the zero polynomial")
    if a.degree < 1:
        raise ValueError("poly_roots needs degree >= 1")
    v = a.valuation()
    roots = [0j] * v
    core = Polynomial(a.coeffs[v:])
    n = core.degree
    if n == 0:
        return roots
    c_desc = core.as_floats()[::-1].astype(complex)
    if n == 1:
        found = np.array([-c_desc[1] / c_desc[0]])
        sweeps = 0
    else:
        found, sweeps = _aberth(c_desc, max_sweeps)

    target = RESIDUAL_TOL * (1 + max(abs(float(c)) for c in a.coeffs))
    abs_desc = np.abs(a.as_floats()[::-1])
    for _ in range(max(max_sweeps - sweeps, 3)):
        p, dp = _horner2(c_desc, found)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(dp != 0, p / dp, 0.0)
        step = np.where(np.isfinite(step), step, 0.0)
        found = found - step
        if np.all(np.abs(step) <= 2 * _EPS * (1 + np.abs(found))):
            break

    found = _merge_clusters(a, [complex(r) for r in found])
    out = []
    for r in found:
        if abs(r.imag) <= 4 * _EPS * abs(r.real):
            cand = complex(r.real, 0.0)
            if exact_abs_residual(a, cand) <= exact_abs_residual(a, r):
                r = cand
        res = exact_abs_residual(a, r)
        floor = 4 * (a.degree + 1) * _EPS * float(np.polyval(abs_desc, abs(r)))
        if res > max(target, floor):
            raise NonConvergence(
                f"root {r} of {a} has residual {res:.3e} > {max(target, floor):.3e}")
        out.append(r)
    roots.extend(out)
    roots.sort(key=lambda r: (round(r.real, 9), round(r.imag, 9)))
    return roots


def roots_equal(r1: complex, r2: complex, tol: float = ROOT_TOL) -> bool:
    return abs(r1 - r2) <= tol * (1 + abs(r1))


def distinct_values(values, tol: float = ROOT_TOL) -> list:
    """Greedy grouping of reals/complexes under the shared relative tolerance."""
    reps = []
    for v in values:
        if not any(abs(v - r) <= tol * (1 + abs(r)) for r in reps):
            reps.append(v)
    return reps


def has_repeated_root(roots, tol: float = ROOT_TOL) -> bool:
    return len(distinct_values(list(roots), tol)) < len(roots)
