"""Random instances and independent oracles shared by the tests."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from math import comb

from riordan_arrays.algebra import Polynomial
from riordan_arrays.riordan import RiordanSpec

SEED = 20261019
CASES = 200
NONZERO = [c for c in range(-5, 6) if c]


def rng(offset: int = 0) -> random.Random:
    return random.Random(SEED + offset)


def random_poly(r: random.Random, degree: int, lo: int = -5, hi: int = 5) -> Polynomial:
    coeffs = [r.randint(lo, hi) for _ in range(degree)] + [r.choice(NONZERO)]
    return Polynomial(coeffs)


def random_spec(r: random.Random, mmax: int = 4, dmax: int = 4) -> RiordanSpec:
    """Valid spec: m <= mmax, coefficients in [-5, 5], 1 <= deg d_den <= dmax."""
    m = r.randint(1, mmax)
    P = random_poly(r, m)
    Q = Polynomial()
    while Q.is_zero():
        Q = Polynomial([r.randint(-5, 5) for _ in range(m)])
    k = r.randint(1, dmax)
    d_den = random_poly(r, k)
    d_num = Polynomial([r.randint(-5, 5) for _ in range(k)])
    if d_num.is_zero():
        d_num = Polynomial([1])
    return RiordanSpec(P, Q, d_num, d_den)


def poly(*coeffs) -> Polynomial:
    return Polynomial(list(coeffs))


EXAMPLE1 = RiordanSpec(poly(-1, 1), poly(1), poly(1), poly(-1, 1))
EXAMPLE3 = RiordanSpec(poly(-1, -1, 1), poly(-1, 1), poly(-1, 1), poly(-1, -1, 1))


def example2(m: int) -> RiordanSpec:
    return RiordanSpec(poly(0, -1, 1), poly(m - 1, 1), poly(1), poly(-1, 1))


def binomial(n: int, k: int) -> int:
    """One-dimensional multiplicative formula, no Pascal recursion."""
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def chessboard(m: int, x: int, y: int) -> int:
    """``sum_{r=1..y} m^r C(y-1, r-1) C(x-y+1, r)`` for ``y >= 1``."""
    return sum(m ** r * comb(y - 1, r - 1) * comb(x - y + 1, r)
               for r in range(1, y + 1) if x - y + 1 >= 0)


def isolated_counts(n: int) -> dict:
    """Strings ``a_1..a_n`` with ``a_1 = 0`` tallied by number of isolated elements."""
    counts: dict = {}
    if n == 0:
        return {0: 1}
    for tail in product((0, 1), repeat=n - 1):
        s = (0,) + tail
        k = sum(1 for j in range(n)
                if all(s[j] != s[i] for i in (j - 1, j + 1) if 0 <= i < n))
        counts[k] = counts.get(k, 0) + 1
    return counts


def fibonacci_row(n: int) -> list:
    row = [1, 0]
    while len(row) < n:
        row.append(row[-1] + row[-2])
    return row[:n]


def hull_lattice_brute(points) -> int:
    """Integer points of the convex hull, testing every point of the bounding box.

    A point is in the hull iff no line through two support points has all
    support points weakly on one side and the point strictly on the other.
    Supports of ``P w - Q`` span two rows, so the hull is never degenerate.
    """
    pts = sorted(set(points))
    assert len({p[1] for p in pts}) > 1

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    edges = [(a, b) for a in pts for b in pts
             if a != b and all(cross(a, b, p) >= 0 for p in pts)]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    return sum(1 for x in range(min(xs), max(xs) + 1) for y in range(min(ys), max(ys) + 1)
               if all(cross(a, b, (x, y)) >= 0 for a, b in edges))


def as_fraction_table(t):
    return [[Fraction(v) for v in row] for row in t]
