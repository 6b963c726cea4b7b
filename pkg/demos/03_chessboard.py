"""
Selections in an x-by-m matrix
==============================

Count ways to pick ``y`` of the ``x*m`` cells so that no two share a row and
picks in adjacent rows share a column.  The counts obey a recurrence with
``P = z^2 - z``, ``Q = z + m - 1``; with boundary data ``phi(x, 0) = 1`` and
``phi(1, 1) = m`` the Cauchy problem reproduces them.
"""

from itertools import combinations, product

from riordan_arrays import (
    CauchyProblem,
    DifferenceEquation,
    Polynomial,
    RationalFunction,
    assemble_problem,
)


def brute(m, x, y):
    total = 0
    for rows in combinations(range(x), y):
        for cols in product(range(m), repeat=y):
            if all(c == d for a, b, c, d in zip(rows, rows[1:], cols, cols[1:]) if b == a + 1):
                total += 1
    return total


for m in (2, 3):
    prob = CauchyProblem(
        Polynomial([0, -1, 1]), Polynomial([m - 1, 1]),
        RationalFunction(Polynomial([1]), Polynomial([-1, 1])),
        [RationalFunction(Polynomial([]), Polynomial([1])),
         RationalFunction(Polynomial([m]), Polynomial([0, 0, 1]))])
    r = prob.solve(8, 4)
    print(f"m = {m}: generating function {assemble_problem(prob)}")
    for y in range(1, 5):
        print("  y =", y, [int(r[x, y]) for x in range(9)])
    ok = all(r[x, y] == brute(m, x, y) for x in range(9) for y in range(1, 5))
    print("  matches brute force:", ok)
