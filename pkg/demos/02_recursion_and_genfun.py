"""
Recursion, closed form, and a three-way check
=============================================

The same array satisfies a linear recurrence read off from ``P w - Q``.
Solving that recurrence from boundary data, expanding the closed-form
bivariate generating function, and evaluating residues must all agree.
"""

import numpy as np

from riordan_arrays import (
    DifferenceEquation,
    Polynomial,
    RiordanSpec,
    assemble_riordan,
    riordan_initial_data,
    series_of,
    solve,
    table,
)

spec = RiordanSpec(Polynomial([-1, -1, 1]), Polynomial([-1, 1]),
                   Polynomial([-1, 1]), Polynomial([-1, -1, 1]))
eq = DifferenceEquation.from_spec(spec)
print("support of the recurrence:", eq.support())

X, Y = 12, 6
by_residue = table(spec, X, Y)
by_recursion = solve(eq, riordan_initial_data(spec, X, Y), X, Y)
gf = assemble_riordan(spec)
print("generating function:", gf)
by_series = series_of(gf, X, Y)

print("residue == recursion:", np.array_equal(by_residue, by_recursion))
print("recursion == series: ", np.array_equal(by_recursion, by_series))
