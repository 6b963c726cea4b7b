"""Truncated Laurent series at infinity.

A :class:`LaurentTail` with coefficients ``s_0 .. s_K`` stands for
``s_0/z + s_1/z^2 + ... + s_K/z^(K+1) + O(z^-(K+2))``.  Such tails are closed
under multiplication, and the residue of ``z^x * tail`` is just ``s_x``.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import Polynomial, rational
from .errors import DegreeViolation, TruncationTooShort, ZeroExponentUnrepresentable


class LaurentTail:
    """Immutable truncated series ``sum_{k<=K} s_k z^(-k-1)``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        cs = tuple(rational(c) for c in coeffs)
        if not cs:
            raise ValueError("a LaurentTail needs at least one coefficient (order >= 0)")
        object.__setattr__(self, "_coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentTail is immutable")

    def __reduce__(self):
        return (LaurentTail, (self._coeffs,))

    @classmethod
    def zero(cls, order: int) -> LaurentTail:
        return cls([0] * (order + 1))

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, k):
        return self._coeffs[k]

    def __len__(self):
        return len(self._coeffs)

    def truncate(self, order: int) -> LaurentTail:
        if order > self.order:
            raise TruncationTooShort(f"cannot extend order {self.order} to {order}")
        return LaurentTail(self._coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __add__(self, other: LaurentTail) -> LaurentTail:
        k = min(self.order, other.order)
        return LaurentTail([a + b for a, b in zip(self._coeffs[: k + 1], other._coeffs)])

    def __sub__(self, other: LaurentTail) -> LaurentTail:
        k = min(self.order, other.order)
        return LaurentTail([a - b for a, b in zip(self._coeffs[: k + 1], other._coeffs)])

    def scale(self, c) -> LaurentTail:
        c = rational(c)
        return LaurentTail([c * a for a in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, LaurentTail):
            return tail_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentTail):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"LaurentTail({[str(c) for c in self._coeffs]})"


def expand_at_infinity(Q: Polynomial, P: Polynomial, K: int) -> LaurentTail:
    """Coefficients ``h_0..h_K`` of ``Q/P = sum h_k z^(-k-1)``.

    Matching the coefficient of ``z^(m-1-n)`` in ``P*h = Q`` gives
    ``p_m h_n = q_(m-1-n) - sum_{i=1..min(n,m)} p_(m-i) h_(n-i)``.
    """
    if P.is_zero():
        raise ZeroDivisionError("expand_at_infinity: P is the zero polynomial")
    if K < 0:
        raise ValueError("truncation order must be >= 0")
    m = P.degree
    if not Q.is_zero() and Q.degree >= m:
        raise DegreeViolation(
            f"deg Q = {Q.degree} >= deg P = {m}: Q/P has nonnegative powers at infinity")
    lead = P.leading
    h: list[Fraction] = []
    for n in range(K + 1):
        acc = Q.coeff(m - 1 - n) if m - 1 - n >= 0 else Fraction(0)
        for i in range(1, min(n, m) + 1):
            pc = P.coeff(m - i)
            if pc:
                acc -= pc * h[n - i]
        h.append(acc / lead)
    return LaurentTail(h)


def tail_mul(a: LaurentTail, b: LaurentTail) -> LaurentTail:
    """Truncated Cauchy product: ``c_k = sum_{i+j=k-1} a_i b_j``."""
    K = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * (K + 1)
    for i in range(K):
        ai = ac[i]
        if not ai:
            continue
        for j in range(K - i):
            bj = bc[j]
            if bj:
                out[i + j + 1] += ai * bj
    return LaurentTail(out)


def tail_pow(h: LaurentTail, y: int) -> LaurentTail:
    """``h**y`` for ``y >= 1`` by binary exponentiation, truncated at h.order.

    ``h**0`` is the constant 1, which is not a tail; callers treat it apart.
    """
    if y < 0:
        raise ValueError("negative exponent")
    if y == 0:
        raise ZeroExponentUnrepresentable("h^0 = 1 has no representation as a tail")
    result = None
    base = h
    while y:
        if y & 1:
            result = base if result is None else tail_mul(result, base)
        y >>= 1
        if y:
            base = tail_mul(base, base)
    return result


def res(a: LaurentTail, x: int) -> Fraction:
    """Coefficient of ``z^-1`` in ``z^x * a``, i.e. ``a_x``."""
    if x < 0:
        raise ValueError("shift must be >= 0")
    if x > a.order:
        raise TruncationTooShort(f"res at x={x} needs order >= {x}, tail has {a.order}")
    return a.coeffs[x]


class RationalFunction:
    """``num/den`` in one variable, expandable at infinity when proper."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __reduce__(self):
        return (RationalFunction, (self.num, self.den))

    def tail(self, K: int) -> LaurentTail:
        return expand_at_infinity(self.num, self.den, K)

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"
