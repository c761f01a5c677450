"""
Unit tests for the hexcoords module.
"""

import numpy as np
import pytest

from src.errors import UsageError
from src.hexcoords import (
    GROUP_ORDER,
    HexIndex,
    HexPoint,
    ReflectionElement,
    apply_reflection,
    compose,
    contains_delta,
    contains_omega,
    from_homogeneous,
    hex_degree,
    hex_norm,
    index_arrays,
    index_ball,
    index_shell,
    inverse,
    phi,
    reduce_mod3,
    reduce_to_omega,
    reflect_index,
    s_to_t,
    t_to_s,
    to_homogeneous,
)


@pytest.fixture
def random_points():
    """A fixed cloud of points spread over several periods."""
    rng = np.random.default_rng(11)
    return HexPoint(rng.uniform(-4, 4, 200), rng.uniform(-4, 4, 200))


def test_homogeneous_round_trip():
    """to_homogeneous and from_homogeneous are inverse maps."""
    rng = np.random.default_rng(0)
    x1, x2 = rng.uniform(-2, 2, 50), rng.uniform(-2, 2, 50)
    t = to_homogeneous(x1, x2)
    back1, back2 = from_homogeneous(t)
    np.testing.assert_allclose(back1, x1, atol=1e-14)
    np.testing.assert_allclose(back2, x2, atol=1e-14)


def test_homogeneous_origin_and_plane():
    """The origin maps to the origin and every image lies on the plane."""
    t = to_homogeneous(0.0, 0.0)
    assert float(t.t1) == 0.0 and float(t.t2) == 0.0 and float(t.t3) == 0.0
    t = to_homogeneous(np.array([0.3, -1.2]), np.array([2.0, 0.5]))
    np.testing.assert_allclose(t.t1 + t.t2 + t.t3, 0.0, atol=1e-15)


def test_from_triple_rejects_off_plane():
    """Points off t1+t2+t3=0 are rejected."""
    with pytest.raises(UsageError):
        HexPoint.from_triple(1.0, 1.0, 1.0)
    assert float(HexPoint.from_triple(1.0, -0.5, -0.5).t3) == -0.5


def test_cell_coordinates_round_trip(random_points):
    """s_to_t inverts t_to_s."""
    s1, s2 = t_to_s(random_points)
    back = s_to_t(s1, s2)
    np.testing.assert_allclose(back.t1, random_points.t1, atol=1e-13)
    np.testing.assert_allclose(back.t2, random_points.t2, atol=1e-13)


def test_reduce_mod3_examples():
    """Lattice translates reduce to the same representative."""
    t = reduce_mod3(HexPoint(3.0, 0.0))
    assert abs(float(t.t1)) < 1e-12 and abs(float(t.t2)) < 1e-12
    a = reduce_mod3(HexPoint(0.2, 0.1))
    b = reduce_mod3(HexPoint(0.2 + 2.0, 0.1 - 1.0))
    np.testing.assert_allclose([float(a.t1), float(a.t2)], [float(b.t1), float(b.t2)], atol=1e-12)


def test_reduce_mod3_is_idempotent(random_points):
    once = reduce_mod3(random_points)
    twice = reduce_mod3(once)
    np.testing.assert_allclose(twice.t1, once.t1, atol=1e-12)
    np.testing.assert_allclose(twice.t2, once.t2, atol=1e-12)
    s1, s2 = t_to_s(once)
    assert np.all((s1 >= 0) & (s1 < 1)) and np.all((s2 >= 0) & (s2 < 1))


def test_elementary_identities():
    """Sum identities for sin 2t_i and cos 2t_i on the plane t1 + t2 + t3 = 0."""
    rng = np.random.default_rng(12)
    t = HexPoint(rng.uniform(-4, 4, 1000), rng.uniform(-4, 4, 1000))
    t1, t2, t3 = t.as_triple()
    np.testing.assert_allclose(np.sin(2 * t1) + np.sin(2 * t2) + np.sin(2 * t3),
                               -4 * np.sin(t1) * np.sin(t2) * np.sin(t3), atol=1e-12)
    np.testing.assert_allclose(np.cos(2 * t1) + np.cos(2 * t2) + np.cos(2 * t3),
                               4 * np.cos(t1) * np.cos(t2) * np.cos(t3) - 1, atol=1e-12)


def test_reduce_to_omega_lands_in_hexagon(random_points):
    """Hexagon representatives lie in the closed hexagon and differ by a lattice vector."""
    u = reduce_to_omega(random_points)
    assert np.all(hex_norm(u) <= 1 + 1e-12)
    s1, s2 = t_to_s(random_points - u)
    np.testing.assert_allclose(s1, np.round(s1), atol=1e-10)
    np.testing.assert_allclose(s2, np.round(s2), atol=1e-10)


def test_contains_omega_half_open():
    """Hexagon membership is half-open."""
    assert bool(contains_omega(HexPoint(0.0, 0.0)))
    assert bool(contains_omega(HexPoint(-1.0, 0.5)))
    assert not bool(contains_omega(HexPoint(1.0, -0.5)))


def test_contains_delta():
    """Triangle membership includes its closed boundary."""
    assert bool(contains_delta(HexPoint(0.0, 0.0)))
    assert bool(contains_delta(HexPoint(0.5, 0.5)))
    assert bool(contains_delta(HexPoint(1.0, 0.0)))
    assert not bool(contains_delta(HexPoint(-0.1, 0.5)))
    assert not bool(contains_delta(HexPoint(0.6, 0.6)))


def test_hex_degree():
    """|j|_H is the largest absolute component."""
    assert hex_degree((1, 0, -1)) == 1
    assert hex_degree((2, -1, -1)) == 2
    assert HexIndex.of(0, 0, 0).degree == 0
    with pytest.raises(UsageError):
        HexIndex.of(1, 1, 1)


def test_index_set_sizes():
    """|H_n| = 3n^2+3n+1 and |J_n| = 6n."""
    for n in range(0, 7):
        assert len(index_ball(n)) == 3 * n * n + 3 * n + 1
    for n in range(1, 7):
        assert len(index_shell(n)) == 6 * n
    assert index_ball(0) == [HexIndex(0, 0)]
    with pytest.raises(UsageError):
        index_ball(-1)


def test_index_ball_is_lexicographic():
    """Enumeration is sorted on (j1, j2) and matches the array form."""
    ball = index_ball(4)
    assert ball == sorted(ball)
    j1, j2 = index_arrays(4)
    assert [HexIndex(int(a), int(b)) for a, b in zip(j1, j2)] == ball


def test_phi_periodicity(random_points):
    """phi_j is periodic under the hexagonal lattice."""
    j = HexIndex.of(2, -3, 1)
    shifted = HexPoint(random_points.t1 + 2.0, random_points.t2 - 1.0)
    np.testing.assert_allclose(phi(j, shifted), phi(j, random_points), atol=1e-12)
    shifted = HexPoint(random_points.t1 + 1.0, random_points.t2 + 1.0)
    np.testing.assert_allclose(phi(j, shifted), phi(j, random_points), atol=1e-12)


def test_phi_matches_dot_product(random_points):
    """phi_j(t) = exp(2 pi i j.t / 3)."""
    j = HexIndex.of(1, 2, -3)
    dot = j.j1 * random_points.t1 + j.j2 * random_points.t2 + j.j3 * random_points.t3
    np.testing.assert_allclose(phi(j, random_points), np.exp(2j * np.pi * dot / 3), atol=1e-12)


def test_sigma1_action():
    """sigma1 maps (t1,t2,t3) to (-t1,-t3,-t2)."""
    t = apply_reflection(HexPoint(0.3, 0.2), ReflectionElement.SIGMA1)
    np.testing.assert_allclose([float(t.t1), float(t.t2), float(t.t3)], [-0.3, 0.5, -0.2])


def test_group_closure_and_inverses():
    """The six elements are closed under composition and have inverses."""
    for g in GROUP_ORDER:
        for h in GROUP_ORDER:
            assert compose(g, h) in GROUP_ORDER
        assert compose(g, inverse(g)) is ReflectionElement.IDENTITY
    for g in (ReflectionElement.SIGMA1, ReflectionElement.SIGMA2, ReflectionElement.SIGMA3):
        assert compose(g, g) is ReflectionElement.IDENTITY


def test_rotation_is_product_of_reflections(random_points):
    """t(sigma1 sigma2) = (t sigma1) sigma2 and the product is a named rotation."""
    g = compose(ReflectionElement.SIGMA1, ReflectionElement.SIGMA2)
    assert g is ReflectionElement.SIGMA1_SIGMA2
    direct = apply_reflection(random_points, g)
    stepwise = apply_reflection(apply_reflection(random_points, ReflectionElement.SIGMA1),
                                ReflectionElement.SIGMA2)
    np.testing.assert_allclose(direct.t1, stepwise.t1, atol=1e-14)
    np.testing.assert_allclose(direct.t2, stepwise.t2, atol=1e-14)


def test_reflection_preserves_hex_norm(random_points):
    """Every group element is an isometry of |.|_H."""
    for g in GROUP_ORDER:
        np.testing.assert_allclose(hex_norm(apply_reflection(random_points, g)),
                                   hex_norm(random_points), atol=1e-14)


def test_reflect_index_moves_exponentials(random_points):
    """phi_j(t g) = phi_{j'}(t) with j' = reflect_index(j, g)."""
    j = HexIndex.of(3, -1, -2)
    for g in GROUP_ORDER:
        lhs = phi(j, apply_reflection(random_points, g))
        rhs = phi(reflect_index(j, g), random_points)
        np.testing.assert_allclose(lhs, rhs, atol=1e-11)
