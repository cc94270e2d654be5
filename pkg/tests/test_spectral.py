import numpy as np
import pytest
import scipy.linalg

from signed_spectra.core.errors import DisjointnessViolation, IndexOutOfRange, IsolatedVertex, ZeroFunction
from signed_spectra.corpus import complete_signed, random_signed_graph
from signed_spectra.models.graph import SignedGraph
from signed_spectra.models.measure import VertexMeasure
from signed_spectra.schemas.options import OperatorKind
from signed_spectra.services.graph_core import build_graph, harary_bipartition, negate
from signed_spectra.services.spectral import (
    check_duality,
    count_zero_eigenvalues,
    disjoint_support_bound,
    dual_rayleigh,
    kirchhoff,
    max_weight_degree_ratio,
    normalized_laplacian,
    rayleigh,
    spectrum,
)

TOLERANCE = 1e-10


@pytest.mark.parametrize(
    "sign, operator, expected",
    [
        (1, OperatorKind.NORMALIZED, [0.0, 1.5, 1.5]),
        (-1, OperatorKind.NORMALIZED, [0.5, 0.5, 2.0]),
        (1, OperatorKind.KIRCHHOFF, [0.0, 3.0, 3.0]),
        (-1, OperatorKind.KIRCHHOFF, [1.0, 1.0, 4.0]),
    ],
)
def test_triangle_spectra(sign, operator, expected):
    values = spectrum(complete_signed(3, sign), operator).eigenvalues
    assert np.allclose(values, expected, atol=TOLERANCE)


def test_single_edge_kirchhoff():
    values = spectrum(build_graph([("a", "b", 2.5)]), OperatorKind.KIRCHHOFF).eigenvalues
    assert np.allclose(values, [0.0, 5.0], atol=TOLERANCE)


def test_balanced_components_give_zero_eigenvalues(two_components):
    spec = spectrum(two_components)
    assert abs(spec.eigenvalue(1)) < TOLERANCE
    assert abs(spec.eigenvalue(2)) < TOLERANCE
    assert spec.eigenvalue(3) > 1e-3
    assert count_zero_eigenvalues(spec) == 2


def test_eigenfunctions_solve_the_operator(c5_one_negative):
    g = c5_one_negative
    spec = spectrum(g)
    phi = spec.eigenfunctions
    degrees = g.degrees
    operator = np.eye(g.vertex_count) - g.signed_adjacency / degrees[:, None]
    assert np.allclose(operator @ phi, phi * spec.eigenvalues, atol=1e-10)
    assert np.allclose(phi.T @ (degrees[:, None] * phi), np.eye(g.vertex_count), atol=1e-10)
    assert np.allclose(normalized_laplacian(g), normalized_laplacian(g).T)


def test_rayleigh_of_eigenfunction(c5_one_negative):
    spec = spectrum(c5_one_negative)
    mu = VertexMeasure.degree(c5_one_negative)
    for k in range(1, 6):
        assert rayleigh(c5_one_negative, spec.eigenfunction(k), mu) == pytest.approx(spec.eigenvalue(k), abs=1e-10)


def test_rayleigh_conventions(positive_triangle, negative_triangle):
    mu = VertexMeasure.degree(positive_triangle)
    assert rayleigh(positive_triangle, {"a": 1.0, "b": 1.0, "c": 1.0}, mu) == 0.0
    f = np.array([0.3, -1.2, 2.0])
    assert dual_rayleigh(positive_triangle, f, mu) == pytest.approx(rayleigh(negative_triangle, f, mu))
    vector_valued = np.stack([f, 2 * f], axis=1)
    assert rayleigh(positive_triangle, vector_valued, mu) == pytest.approx(rayleigh(positive_triangle, f, mu))
    with pytest.raises(ZeroFunction):
        rayleigh(positive_triangle, np.zeros(3), mu)


def test_duality_identity(negative_triangle, c5_one_negative):
    assert check_duality(negative_triangle, 1) < 1e-8
    for k in range(1, 6):
        assert check_duality(c5_one_negative, k) < 1e-8
    with pytest.raises(IndexOutOfRange):
        check_duality(negative_triangle, 4)


def test_negated_balanced_graph_reaches_two(two_components):
    assert spectrum(negate(two_components)).largest == pytest.approx(2.0, abs=1e-10)


def test_max_weight_degree_ratio(positive_triangle):
    g = positive_triangle
    assert max_weight_degree_ratio(g, VertexMeasure.degree(g)) == 1.0
    assert max_weight_degree_ratio(g, VertexMeasure.unit(g)) == 2.0
    twos = VertexMeasure.custom(g, {"a": 2.0, "b": 2.0, "c": 2.0})
    assert max_weight_degree_ratio(g, twos) == 1.0


def test_disjoint_support_bound(two_components):
    bp = harary_bipartition(two_components)
    indicator = bp.indicator(two_components)
    first = np.where(np.arange(9) < 4, indicator, 0.0)
    second = np.where(np.arange(9) >= 4, indicator, 0.0)
    lam, bound = disjoint_support_bound(two_components, [first, second])
    assert lam <= bound + 1e-10
    with pytest.raises(DisjointnessViolation):
        disjoint_support_bound(two_components, [first, first])


def test_isolated_vertex_rejected():
    signed = np.zeros((3, 3))
    signed[0, 1] = signed[1, 0] = 1.0
    g = SignedGraph.from_signed_adjacency(signed, ["a", "b", "c"])
    with pytest.raises(IsolatedVertex):
        spectrum(g)
    assert np.allclose(spectrum(g, OperatorKind.KIRCHHOFF).eigenvalues, [0.0, 0.0, 2.0], atol=TOLERANCE)


def _largest_quotient_on_span(g, basis):
    """max of R^σ over span(basis) under μ_d: top eigenvalue of the projected pencil."""
    stiffness = basis.T @ kirchhoff(g) @ basis
    mass = basis.T @ np.diag(g.degrees) @ basis
    return float(scipy.linalg.eigh(stiffness, mass, eigvals_only=True)[-1])


def test_eigenvalues_are_min_max_values(rng):
    for _ in range(10):
        g = random_signed_graph(rng, int(rng.integers(3, 9)))
        spec = spectrum(g)
        for k in range(1, g.vertex_count + 1):
            lambda_k = spec.eigenvalue(k)
            assert _largest_quotient_on_span(g, spec.eigenfunctions[:, :k]) == pytest.approx(lambda_k, abs=1e-9)
            for _ in range(5):
                subspace = rng.normal(size=(g.vertex_count, k))
                assert _largest_quotient_on_span(g, subspace) >= lambda_k - 1e-9


def test_rayleigh_is_even(c5_one_negative, rng):
    mu = VertexMeasure.degree(c5_one_negative)
    for column in spectrum(c5_one_negative).eigenfunctions.T:
        assert rayleigh(c5_one_negative, -column, mu) == rayleigh(c5_one_negative, column, mu)
    f = rng.normal(size=5)
    assert rayleigh(c5_one_negative, -f, mu) == pytest.approx(rayleigh(c5_one_negative, f, mu), abs=1e-15)
