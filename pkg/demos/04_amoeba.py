"""
Amoeba of the characteristic polynomial
=======================================

For each ``t = log|z|`` the vertical section of the amoeba of
``P(z) w - Q(z)`` is the interval swept by ``log|Q/P|`` on the circle.
The number of complement components is bounded below by root counts and
above by lattice points of the Newton polygon.
"""

import numpy as np

from riordan_arrays import DifferenceEquation, Polynomial, boundary_table, component_census

eq = DifferenceEquation(Polynomial([-1, -1, 1]), Polynomial([-1, 1]))
rows = boundary_table(eq, (-2.0, 2.0), 9, nphi=512)
for t, lo, hi in rows:
    print(f"t = {t:+.2f}   eta in [{lo:+.4f}, {hi:+.4f}]")

c = component_census(eq)
print(c.as_dict())

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    dense = np.array(boundary_table(eq, (-3.0, 3.0), 301, nphi=256))
    plt.fill_between(dense[:, 0], dense[:, 1], dense[:, 2], alpha=0.4)
    plt.xlabel("log|z|")
    plt.ylabel("log|w|")
    plt.savefig("amoeba.png", dpi=120)
    print("wrote amoeba.png")
