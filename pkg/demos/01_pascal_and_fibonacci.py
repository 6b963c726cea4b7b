"""
Riordan arrays from a residue formula
=====================================

An array is given by ``h = Q/P`` and a row-0 series ``d``, both rational.
Its entries are residues ``r(x, y) = Res z^x d h^y``, computed on truncated
Laurent tails with exact rationals.
"""

from riordan_arrays import Polynomial, RiordanSpec, entry, table

# Pascal's triangle: h = 1/(z-1), d = 1/(z-1)
pascal = RiordanSpec(Polynomial([-1, 1]), Polynomial([1]),
                     Polynomial([1]), Polynomial([-1, 1]))
t = table(pascal, 6, 6)
for x in range(7):
    print(" ".join(f"{int(v):3d}" for v in t[x, : x + 1]))

print("C(10, 4) =", entry(pascal, 10, 4))

# h = (z-1)/(z^2-z-1) and d = (z-1)/(z^2-z-1): column 0 holds Fibonacci numbers
fib = RiordanSpec(Polynomial([-1, -1, 1]), Polynomial([-1, 1]),
                  Polynomial([-1, 1]), Polynomial([-1, -1, 1]))
print("column 0:", [int(v) for v in table(fib, 12, 0)[:, 0]])
