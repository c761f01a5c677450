"""
Unit tests for the test-function registry.
"""

import numpy as np
import pytest

from src.errors import UsageError
from src.hexcoords import GROUP_ORDER, HexIndex, HexPoint, apply_reflection, s_to_t
from src.registry import (
    Cone,
    Constant,
    Exponential,
    PeriodizedGaussian,
    RandomPolynomial,
    parse_function,
)


@pytest.fixture
def points():
    rng = np.random.default_rng(51)
    return s_to_t(rng.uniform(-1, 2, 80), rng.uniform(-1, 2, 80))


@pytest.mark.parametrize("name, kind", [
    ("const", Constant),
    ("phi:1,0,-1", Exponential),
    ("gauss:0.3", PeriodizedGaussian),
    ("cone", Cone),
    ("poly:3", RandomPolynomial),
])
def test_parse_function_round_trip(name, kind):
    """A registry name parses to its type and reproduces itself."""
    f = parse_function(name)
    assert isinstance(f, kind)
    assert f.name == name


@pytest.mark.parametrize("name", ["phi:1,1", "phi:1,1,1", "gauss:-1", "gauss:x", "cone:2", "poly:-1",
                                  "spline", ""])
def test_parse_function_rejects(name):
    with pytest.raises(UsageError):
        parse_function(name)


def test_constant_value(points):
    np.testing.assert_array_equal(parse_function("const:2.5")(points), 2.5)
    assert Constant().degree == 0


def test_functions_are_periodic(points):
    """Every registry function is invariant under the hexagonal lattice."""
    shifted = HexPoint(points.t1 + 2.0, points.t2 - 1.0)
    for f in (PeriodizedGaussian(0.3), Cone(), RandomPolynomial(4), Exponential(HexIndex.of(2, -3, 1))):
        np.testing.assert_allclose(f(shifted), f(points), atol=1e-10)


def test_invariant_functions(points):
    """The Gaussian and the constant are invariant under the reflection group."""
    for f in (PeriodizedGaussian(0.3), Constant()):
        assert f.invariant
        for g in GROUP_ORDER:
            np.testing.assert_allclose(f(apply_reflection(points, g)), f(points), atol=1e-12)


def test_cone_shape():
    """Peak 1 at the origin, zero beyond the radius."""
    f = Cone()
    assert float(f(HexPoint(0.0, 0.0))) == 1.0
    assert float(f(HexPoint(0.5, -0.5))) == 0.0
    assert float(f(HexPoint(0.2, -0.2))) == pytest.approx(1 - np.sqrt(0.08) / 0.4)


def test_gaussian_coefficients_are_real_and_even():
    g = PeriodizedGaussian(0.4)
    assert g.coefficient(1, 0) == pytest.approx(g.coefficient(-1, 0))
    assert g.coefficient(0, 0) > g.coefficient(1, 0) > g.coefficient(2, 0) > 0


def test_random_polynomial_is_seeded_and_real(points):
    a = RandomPolynomial(5, seed=3)
    b = RandomPolynomial(5, seed=3)
    np.testing.assert_array_equal(a.table.values, b.table.values)
    assert a.table.is_real()
    assert a.table.max_degree == 5
    assert not np.array_equal(RandomPolynomial(5, seed=4).table.values, a.table.values)
    assert np.isrealobj(a(points))
