"""Rational Riordan arrays as solutions of linear difference equations.

Entries can be computed three ways (residue formula, recursion, expansion of
the closed-form generating function); the amoeba of ``P(z) w - Q(z)`` locates
the dominant saddle that governs diagonal growth.
"""
from .algebra import Polynomial, poly_gcd, poly_roots
from .amoeba import (
    boundary_cloud,
    boundary_table,
    component_census,
    cone_omega,
    membership,
    newton_polygon,
    section,
)
from .asympt import (
    Direction,
    SaddleResult,
    convergence_probe,
    dominant_saddle,
    estimate,
    hessian_H,
    saddle_candidates,
    select_dominant,
)
from .cauchy import (
    CauchyProblem,
    DifferenceEquation,
    InitialData,
    riordan_initial_data,
    solve,
    well_posed,
)
from .errors import RiordanError
from .genfun import (
    BiPoly,
    BivariateRational,
    ColumnGF,
    assemble,
    assemble_problem,
    assemble_riordan,
    correction_is_zero,
    series_of,
    triple_check,
)
from .laurent import LaurentTail, RationalFunction, expand_at_infinity, res, tail_mul, tail_pow
from .riordan import RiordanSpec, entry, table, validate

__all__ = [
    "BiPoly", "BivariateRational", "CauchyProblem", "ColumnGF", "DifferenceEquation",
    "Direction", "InitialData", "LaurentTail", "Polynomial", "RationalFunction",
    "RiordanError", "RiordanSpec", "SaddleResult", "assemble", "assemble_problem",
    "assemble_riordan", "boundary_cloud", "boundary_table", "component_census", "cone_omega",
    "convergence_probe", "correction_is_zero", "dominant_saddle", "entry", "estimate",
    "expand_at_infinity", "hessian_H", "membership", "newton_polygon", "poly_gcd",
    "poly_roots", "res", "riordan_initial_data", "saddle_candidates", "section",
    "select_dominant", "series_of", "solve", "table", "tail_mul", "tail_pow",
    "triple_check", "validate", "well_posed",
]
