"""
Diagonal asymptotics by the saddle point
========================================

Along a direction ``(p, q)`` inside the cone of the Newton polygon,
``r(p lam, q lam)`` is approximated by a one-term saddle-point formula.
For Pascal's triangle and ``(2, 1)`` this is the central binomial estimate
``4^lam / sqrt(pi lam)``, so the ratio approaches 1 like ``1 - 1/(8 lam)``.
"""

from riordan_arrays import (
    DifferenceEquation,
    Direction,
    Polynomial,
    RiordanSpec,
    convergence_probe,
    dominant_saddle,
)

pascal = RiordanSpec(Polynomial([-1, 1]), Polynomial([1]),
                     Polynomial([1]), Polynomial([-1, 1]))

res = dominant_saddle(DifferenceEquation.from_spec(pascal), Direction(2, 1))
print(f"saddle z0 = {res.z0:.6f}, w0 = {res.w0:.6f}, H = {res.H:.6f}")

for row in convergence_probe(pascal, Direction(2, 1), [10, 50, 200, 1000]):
    print(f"lam = {row.lam:5d}  exact/estimate = {row.ratio:.6f}"
          f"  1 - 1/(8 lam) = {1 - 1 / (8 * row.lam):.6f}")
