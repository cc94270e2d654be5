import numpy as np
import pytest

from signed_spectra.core.errors import ZeroFunction
from signed_spectra.models.measure import VertexMeasure
from signed_spectra.services.cheeger import l1_rayleigh
from signed_spectra.services.graph_core import build_graph, harary_bipartition
from signed_spectra.services.spectral import spectrum
from signed_spectra.services.sweep import sweep_linear, sweep_quadratic


@pytest.mark.parametrize("sweep", [sweep_quadratic, sweep_linear])
def test_harary_indicator_gives_a_perfect_cut(sweep, two_components):
    mu = VertexMeasure.degree(two_components)
    indicator = harary_bipartition(two_components).indicator(two_components)
    assert sweep(two_components, indicator, mu).value == 0.0


def test_quadratic_sweep_of_first_eigenfunction(negative_triangle):
    mu = VertexMeasure.degree(negative_triangle)
    result = sweep_quadratic(negative_triangle, spectrum(negative_triangle).eigenfunction(1), mu)
    assert result.guarantee == pytest.approx(1.0, abs=1e-10)
    assert result.value <= result.guarantee + 1e-9


def test_linear_sweep_stays_below_l1_ratio(negative_triangle):
    mu = VertexMeasure.degree(negative_triangle)
    f = spectrum(negative_triangle).eigenfunction(1)
    result = sweep_linear(negative_triangle, f, mu)
    assert result.guarantee == l1_rayleigh(negative_triangle, f, mu)
    assert result.value <= result.guarantee + 1e-9


def test_zero_threshold_convention():
    g = build_graph([("a", "b", -1.0), ("a", "c", 1.0), ("b", "c", -1.0)])
    result = sweep_quadratic(g, {"a": 1.0, "b": -1.0, "c": 0.0}, VertexMeasure.degree(g))
    assert result.threshold == 0.0
    assert result.value == 0.0
    assert result.bipartition.v1 == {"a", "c"}
    assert result.bipartition.v2 == {"b"}


def test_quadratic_threshold_is_squared():
    g = build_graph([("a", "b", 1.0), ("b", "c", 1.0), ("c", "d", 1.0)])
    f = {"a": 3.0, "b": 3.0, "c": -0.5, "d": 0.5}
    mu = VertexMeasure.unit(g)
    quadratic = sweep_quadratic(g, f, mu)
    linear = sweep_linear(g, f, mu)
    assert linear.threshold == 3.0
    assert quadratic.bipartition == linear.bipartition
    assert quadratic.threshold == linear.threshold**2


def test_sweep_respects_the_mask(c5_one_negative, rng):
    mu = VertexMeasure.degree(c5_one_negative)
    within = np.array([True, True, True, False, False])
    result = sweep_quadratic(c5_one_negative, rng.normal(size=5), mu, within=within)
    assert result.bipartition.union <= {"v0", "v1", "v2"}


def test_zero_function_rejected(c5_one_negative):
    mu = VertexMeasure.degree(c5_one_negative)
    with pytest.raises(ZeroFunction):
        sweep_quadratic(c5_one_negative, np.zeros(5), mu)
    with pytest.raises(ZeroFunction):
        sweep_linear(c5_one_negative, np.ones(5), mu, within=np.zeros(5, dtype=bool))
