"""
Unit tests for the triangle module.
"""

import numpy as np
import pytest

from src.errors import UsageError
from src.hexcoords import HexPoint, ReflectionElement, apply_reflection, contains_delta, s_to_t
from src.quadrature import delta_nodes, inner_product_H, inner_product_delta, sample
from src.registry import Constant, PeriodizedGaussian
from src.triangle import (
    CosineCoeffTable,
    DeltaQuadrature,
    TriIndex,
    check_compatibility,
    cosine_cesaro1,
    cosine_coeffs,
    cosine_gram,
    evaluate_cosine,
    extend_symmetric,
    hexagon_cesaro1,
    orbit,
    project_sym,
    reduce_to_delta,
    tc,
    to_hex_table,
    triangle_indices,
    ts,
)


@pytest.fixture(scope="module")
def fine_rule():
    """The M=256 triangle rule shared by the accuracy tests."""
    return DeltaQuadrature(256)


@pytest.fixture
def points():
    rng = np.random.default_rng(41)
    return s_to_t(rng.uniform(0, 1, 60), rng.uniform(0, 1, 60))


def _expected_norm(k):
    """<TC_k, TC_k>: 1 at the origin, 1/3 on the walls k1 = 0 or k2 = 0, 1/6 otherwise."""
    if k.k1 == 0 and k.k2 == 0:
        return 1.0
    if k.k1 == 0 or k.k2 == 0:
        return 1.0 / 3.0
    return 1.0 / 6.0


def test_tri_index_validation():
    assert TriIndex.of(1, 2, -3) == TriIndex(1, 2)
    assert TriIndex(2, 1).degree == 3
    with pytest.raises(UsageError):
        TriIndex(-1, 0)
    with pytest.raises(UsageError):
        TriIndex.of(1, 1, -1)


def test_triangle_indices():
    indices = triangle_indices(2)
    assert indices == [TriIndex(0, 0), TriIndex(0, 1), TriIndex(0, 2),
                       TriIndex(1, 0), TriIndex(1, 1), TriIndex(2, 0)]
    assert len(triangle_indices(5)) == 21
    with pytest.raises(UsageError):
        triangle_indices(-1)


def test_orbit_has_six_entries():
    k = TriIndex(2, 1)
    assert len(orbit(k)) == 6
    assert len(set(orbit(k))) == 6
    assert len(set(orbit(TriIndex(0, 2)))) == 3


def test_projections_are_idempotent(points):
    f = PeriodizedGaussian(0.3)
    g = lambda t: f(t) * (1 + t.t1)
    for sign in (1, -1):
        once = project_sym(g, sign)
        np.testing.assert_allclose(project_sym(once, sign)(points), once(points), atol=1e-12)
    with pytest.raises(UsageError):
        project_sym(g, 2)


def test_tc_and_ts_at_zero_index(points):
    zero = TriIndex(0, 0)
    np.testing.assert_allclose(tc(zero, points), 1.0, atol=1e-15)
    np.testing.assert_allclose(ts(zero, points), 0.0, atol=1e-15)


def test_symmetry_under_reflection(points):
    """TC_k is invariant and TS_k anti-invariant under sigma1."""
    reflected = apply_reflection(points, ReflectionElement.SIGMA1)
    for k in (TriIndex(1, 0), TriIndex(2, 1), TriIndex(3, 3)):
        np.testing.assert_allclose(tc(k, reflected), tc(k, points), atol=1e-12)
        np.testing.assert_allclose(ts(k, reflected), -ts(k, points), atol=1e-12)


def test_tc_conjugation_and_diagonal_realness(points):
    """TC_(k2,k1) = conj(TC_(k1,k2)); TC is real on the diagonal."""
    np.testing.assert_allclose(tc(TriIndex(2, 1), points), np.conj(tc(TriIndex(1, 2), points)), atol=1e-12)
    np.testing.assert_allclose(tc(TriIndex(2, 2), points).imag, 0.0, atol=1e-12)


def test_gram_matrix_is_diagonal(fine_rule):
    """TC_k with -k3 <= 4 are orthogonal over the triangle within 5e-6 at M=256."""
    gram = cosine_gram(4, 256, fine_rule)
    indices = triangle_indices(4)
    expected = np.diag([_expected_norm(k) for k in indices])
    assert np.max(np.abs(gram - expected)) <= 5e-6
    assert abs(gram[0, 0] - 1.0) <= 5e-6


def test_cosine_coeffs_of_cosine(fine_rule):
    """The table of TC_m is a unit entry at m."""
    m = TriIndex(1, 2)
    table = cosine_coeffs(lambda t: tc(m, t), 4, 256, fine_rule)
    for k, value in table.entries.items():
        expected = 1.0 if k == m else 0.0
        assert abs(value - expected) <= 5e-6


def test_cosine_coeffs_of_constant():
    table = cosine_coeffs(Constant(2.0), 3, 32)
    assert table.entry(TriIndex(0, 0)) == pytest.approx(2.0, abs=1e-12)
    assert len(table) == 10
    assert table.M == 32


def test_triangle_and_hexagon_inner_products_agree():
    """For an invariant F, <F, TC_k> over the triangle equals the hexagon inner product."""
    F = PeriodizedGaussian(0.3)
    for k in (TriIndex(0, 1), TriIndex(1, 2)):
        cosine = lambda t, k=k: tc(k, t)
        on_delta = inner_product_delta(F, cosine, 256)
        on_hexagon = inner_product_H(sample(F, 33), sample(cosine, 33))
        assert abs(on_delta - on_hexagon) <= 5e-6


def test_evaluate_cosine_reproduces_series(points):
    table = CosineCoeffTable({TriIndex(0, 0): 0.5, TriIndex(2, 1): 1.0, TriIndex(1, 2): 1.0}, 3, 16)
    expected = 0.5 + tc(TriIndex(2, 1), points) + tc(TriIndex(1, 2), points)
    np.testing.assert_allclose(evaluate_cosine(table, points), expected, atol=1e-12)
    assert to_hex_table(table).is_real()


def test_cesaro1_error_decreases(fine_rule):
    """Sup error of the (C,1) cosine means over the triangle decreases in n."""
    f = PeriodizedGaussian(0.3)
    nodes = delta_nodes(16)
    errors = []
    for n in (4, 8, 16, 32):
        approx = cosine_cesaro1(f, n, 256, fine_rule)
        errors.append(float(np.max(np.abs(approx(nodes) - f(nodes)))))
    assert errors[0] > errors[1] > errors[2] > errors[3]


def test_cesaro1_matches_hexagon_operator(fine_rule):
    """Triangle (C,1) means equal the hexagonal (C,1) means of the symmetric extension."""
    f = PeriodizedGaussian(0.3)
    nodes = delta_nodes(8)
    on_triangle = cosine_cesaro1(f, 6, 256, fine_rule)(nodes)
    on_hexagon = hexagon_cesaro1(f, 6)(nodes)
    assert np.max(np.abs(on_triangle - on_hexagon)) <= 5e-6


def test_compatibility_of_cosines():
    """Restrictions of TC_k satisfy the boundary identities; t1 does not."""
    for k in (TriIndex(1, 0), TriIndex(2, 3)):
        assert check_compatibility(lambda t, k=k: tc(k, t), 65)["max_violation"] <= 1e-10
    assert check_compatibility(Constant(), 5)["max_violation"] == 0.0
    report = check_compatibility(lambda t: t.t1, 33)
    assert report["max_violation"] > 0.1
    assert report["samples"] == 33
    with pytest.raises(UsageError):
        check_compatibility(Constant(), 1)


def test_reduce_to_delta(points):
    """Every point has an image in the triangle; points already inside stay put."""
    rng = np.random.default_rng(42)
    spread = HexPoint(rng.uniform(-3, 3, 200), rng.uniform(-3, 3, 200))
    assert np.all(contains_delta(reduce_to_delta(spread), 1e-9))
    inside = HexPoint(np.array([0.1, 0.3, 0.25]), np.array([0.2, 0.1, 0.5]))
    back = reduce_to_delta(inside)
    np.testing.assert_allclose(back.t1, inside.t1, atol=1e-12)
    np.testing.assert_allclose(back.t2, inside.t2, atol=1e-12)


def test_extend_symmetric_is_invariant(points):
    """The extension is invariant under the group and periodic."""
    F = extend_symmetric(lambda t: t.t1 + 2 * t.t2 ** 2)
    for g in (ReflectionElement.SIGMA1, ReflectionElement.SIGMA2_SIGMA1):
        np.testing.assert_allclose(F(apply_reflection(points, g)), F(points), atol=1e-10)
    np.testing.assert_allclose(F(HexPoint(points.t1 + 2.0, points.t2 - 1.0)), F(points), atol=1e-10)


def test_cosine_table_serialization():
    table = CosineCoeffTable({TriIndex(1, 0): 0.25 + 0.5j, TriIndex(0, 0): 1.0}, 1, 8)
    data = table.to_dict()
    assert [row["k"] for row in data["tri_entries"]] == [[0, 0, 0], [1, 0, -1]]
    back = CosineCoeffTable.from_dict(data)
    assert back.entries == table.entries
    assert list(table.to_frame().columns) == ["k1", "k2", "k3", "re", "im"]


def test_delta_quadrature_moments():
    rule = DeltaQuadrature(4)
    assert rule.size == 48
    np.testing.assert_allclose(rule.moments(0), [[1.0]])
