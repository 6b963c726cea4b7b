from fractions import Fraction

import numpy as np
import pytest

from helpers import EXAMPLE1, EXAMPLE3, binomial, example2
from riordan_arrays.algebra import Polynomial
from riordan_arrays.errors import InvalidSpec, NonRationalInput
from riordan_arrays.laurent import LaurentTail
from riordan_arrays.riordan import (
    RiordanSpec,
    entry,
    is_proper,
    require_valid,
    table,
    validate,
)


def P(*c):
    return Polynomial(list(c))


def test_validate_examples():
    assert validate(EXAMPLE1).ok
    bad = validate(RiordanSpec(P(1), P(1), P(1), P(-1, 1)))
    assert any("deg P >= 1" in v for v in bad.violations)
    bad = validate(RiordanSpec(P(-1, 0, 1), P(0, 0, 1), P(1), P(-1, 1)))
    assert any("deg Q < deg P" in v for v in bad.violations)
    with pytest.raises(InvalidSpec):
        require_valid(RiordanSpec(P(-1, 1), P(), P(1), P(-1, 1)))


def test_validate_d_rules():
    r = validate(RiordanSpec(P(-1, 1), P(1), P(0, 1), P(-1, 1)))
    assert not r.ok and "d_num" in r.violations[0]
    # pole of d away from the roots of P and Q: warning only
    r = validate(RiordanSpec(P(-1, 1), P(1), P(1), P(-3, 1)))
    assert r.ok and r.warnings
    assert r.as_dict()["valid"] is True


def test_is_proper():
    assert is_proper(EXAMPLE1)
    assert is_proper(example2(2))
    assert not is_proper(RiordanSpec(P(0, 0, 1), P(1), P(1), P(-1, 1)))


def test_entry_examples():
    assert entry(EXAMPLE1, 4, 2) == 6
    assert entry(EXAMPLE1, 0, 1) == 0
    # the stated d and h of Example 2 give 3 here; the chessboard count 4
    # comes from the stated initial data (see test_cauchy)
    assert entry(example2(2), 2, 1) == 3
    with pytest.raises(ValueError):
        entry(EXAMPLE1, -1, 0)


def test_table_examples():
    t = table(EXAMPLE1, 4, 4)
    assert t.shape == (5, 5)
    assert all(t[x, y] == binomial(x, y) for x in range(5) for y in range(5))
    assert table(EXAMPLE3, 0, 0)[0, 0] == EXAMPLE3.d_expansion(0).coeffs[0]
    assert list(table(EXAMPLE3, 6, 0)[:, 0]) == [1, 0, 1, 1, 2, 3, 5]


def test_table_matches_entry_and_jobs():
    spec = RiordanSpec(P(2, -1, 3), P(Fraction(1, 2), -1), P(1, 1), P(1, 0, -2))
    t = table(spec, 8, 5)
    assert all(t[x, y] == entry(spec, x, y) for x in range(9) for y in range(6))
    assert np.array_equal(t, table(spec, 8, 5, jobs=2))


def test_example2_frozen_table():
    # frozen from the residue formula with d = 1/(z-1), h = (z+1)/(z^2-z)
    t = table(example2(2), 6, 3)
    assert [list(map(int, t[:, y])) for y in range(4)] == [
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 3, 5, 7, 9, 11],
        [0, 0, 1, 5, 13, 25, 41],
        [0, 0, 0, 1, 7, 25, 63],
    ]


def test_formal_d():
    d = LaurentTail([1, 2, 3, 4, 5])
    spec = RiordanSpec.from_series(P(-1, 1), P(1), d)
    assert validate(spec).ok
    assert entry(spec, 2, 0) == 3
    with pytest.raises(NonRationalInput):
        spec.d_value(2)
