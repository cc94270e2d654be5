import numpy as np
import pytest

from signed_spectra.core.errors import BadEpsilon, IndexOutOfRange, NotUnit, PartitionFailure, ZeroMap
from signed_spectra.corpus import balanced_components, cycle_with_negative_edges, random_signed_graph
from signed_spectra.models.clustering import Embedding
from signed_spectra.models.graph import SubBipartition
from signed_spectra.models.measure import VertexMeasure
from signed_spectra.schemas.clustering import ClusterResponse
from signed_spectra.schemas.options import CheegerMode, EmbeddingMode, PartitionStrategy
from signed_spectra.services.cheeger import beta, h_exact
from signed_spectra.services.clustering import (
    cluster,
    default_epsilon,
    embed,
    localize,
    normalize,
    projective_distance,
    select_coordinate,
    sweep_certificate,
)
from signed_spectra.services.graph_core import connected_components, negate
from signed_spectra.services.partition import partition_projective, projective_distances
from signed_spectra.services.spectral import rayleigh
from signed_spectra.services.sweep import sweep_quadratic

STRATEGIES = [PartitionStrategy.RANDOM_PADDED, PartitionStrategy.PROJECTIVE_KMEANS]


def _component_labels(g):
    return {g.labels_of(component) for component in connected_components(g)}


def test_projective_distance():
    x = np.array([0.6, 0.8])
    assert projective_distance(x, x) == 0.0
    assert projective_distance(x, -x) == 0.0
    assert projective_distance([1.0, 0.0], [0.0, 1.0]) == pytest.approx(np.sqrt(2.0))
    with pytest.raises(NotUnit):
        projective_distance([1.0, 1.0], [1.0, 0.0])


def test_projective_distance_triangle_inequality(rng):
    for _ in range(1000):
        x, y, z = rng.normal(size=(3, int(rng.integers(1, 6))))
        x, y, z = (p / np.linalg.norm(p) for p in (x, y, z))
        assert projective_distance(x, z) <= projective_distance(x, y) + projective_distance(y, z) + 1e-12


def test_flipping_an_eigenfunction_changes_nothing(rng):
    g = random_signed_graph(rng, 8)
    mu = VertexMeasure.degree(g)
    emb = embed(g, 3)
    points = normalize(emb).points
    distances = projective_distances(points, points)
    for i in range(emb.k):
        flip = np.ones(emb.k)
        flip[i] = -1.0
        flipped = Embedding(graph=g, points=emb.points * flip, source=emb.source)
        flipped_points = normalize(flipped).points
        assert np.allclose(projective_distances(flipped_points, flipped_points), distances, atol=1e-14)

        phi = emb.points[:, i]
        assert rayleigh(g, -phi, mu) == rayleigh(g, phi, mu)
        assert rayleigh(g, flipped.points, mu) == pytest.approx(rayleigh(g, emb.points, mu), abs=1e-14)
        forward, backward = sweep_quadratic(g, phi, mu), sweep_quadratic(g, -phi, mu)
        assert backward.value == pytest.approx(forward.value, abs=1e-12)
        assert beta(g, forward.bipartition, mu) == pytest.approx(
            beta(g, SubBipartition(forward.bipartition.v2, forward.bipartition.v1), mu), abs=1e-15
        )


def test_first_eigenfunction_of_balanced_graph_has_constant_magnitude():
    g = balanced_components((6,), seed=2)
    emb = embed(g, 1)
    magnitudes = np.abs(emb.points[:, 0])
    assert np.allclose(magnitudes, magnitudes[0], atol=1e-10)
    assert emb.source == "first-k"


def test_full_embedding_is_orthonormal(c5_one_negative):
    g = c5_one_negative
    emb = embed(g, g.vertex_count)
    gram = (emb.points * g.degrees[:, None]).T @ emb.points
    assert np.allclose(gram, np.eye(g.vertex_count), atol=1e-10)
    assert embed(g, 2, EmbeddingMode.ANTIBALANCED).source == "last-k"
    with pytest.raises(IndexOutOfRange):
        embed(g, 6)


def test_normalize_excludes_vanishing_rows(c5_one_negative):
    points = np.array([[3.0, 4.0], [0.0, 0.0], [0.0, -2.0], [1.0, 0.0], [0.0, 1.0]])
    normalized = normalize(Embedding(graph=c5_one_negative, points=points, source="first-k"))
    assert normalized.excluded == ("v1",)
    assert normalized.labels == ("v0", "v2", "v3", "v4")
    assert np.allclose(np.linalg.norm(normalized.points, axis=1), 1.0)
    assert np.allclose(normalized.as_dict()["v0"], [0.6, 0.8])


def test_single_part_takes_everything(c5_one_negative):
    normalized = normalize(embed(c5_one_negative, 2))
    part = partition_projective(normalized, VertexMeasure.degree(c5_one_negative), 1)
    assert part.subsets == (frozenset(normalized.labels),)
    assert part.masses == pytest.approx((1.0,))
    assert part.separation == float("inf")


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_partition_separates_balanced_components(strategy, two_components):
    normalized = normalize(embed(two_components, 2))
    part = partition_projective(normalized, VertexMeasure.degree(two_components), 2, strategy=strategy, seed=4)
    assert set(part.subsets) == _component_labels(two_components)
    assert part.separation == pytest.approx(np.sqrt(2.0), abs=1e-8)


def test_partition_needs_enough_projective_classes(two_components):
    normalized = normalize(embed(two_components, 2))
    with pytest.raises(PartitionFailure):
        partition_projective(normalized, VertexMeasure.degree(two_components), 3)


def test_localize(two_components):
    emb = embed(two_components, 2)
    normalized = normalize(emb)
    assert np.allclose(localize(emb, normalized.labels, 1.999), emb.points)

    first, _ = sorted(_component_labels(two_components), key=len)
    psi = localize(emb, first, 0.5)
    outside = ~two_components.mask(first)
    assert np.all(psi[outside] == 0.0)
    assert np.allclose(psi[~outside], emb.points[~outside])

    for epsilon in (0.0, 2.0, -1.0):
        with pytest.raises(BadEpsilon):
            localize(emb, first, epsilon)


def test_select_coordinate(c5_one_negative, rng):
    f = rng.normal(size=5)
    chosen, index = select_coordinate(c5_one_negative, f)
    assert index == 0
    assert np.array_equal(chosen, f)

    chosen, index = select_coordinate(c5_one_negative, np.stack([np.zeros(5), f], axis=1))
    assert index == 1
    mu = VertexMeasure.degree(c5_one_negative)
    psi = np.stack([f, f[::-1]], axis=1)
    chosen, _ = select_coordinate(c5_one_negative, psi, mu)
    assert rayleigh(c5_one_negative, chosen, mu) <= rayleigh(c5_one_negative, psi, mu) + 1e-12
    with pytest.raises(ZeroMap):
        select_coordinate(c5_one_negative, np.zeros((5, 2)))


def test_default_epsilon():
    assert default_epsilon(1) == 0.5
    assert default_epsilon(2) == pytest.approx(1.0 / (2.0 * 2**2.5))
    assert default_epsilon(50) == 0.05


@pytest.mark.parametrize("strategy", STRATEGIES)
@pytest.mark.parametrize("sizes", [(4, 5), (4, 5, 5), (3, 3, 4)])
def test_cluster_recovers_balanced_components(strategy, sizes):
    g = balanced_components(sizes, seed=len(sizes))
    result = cluster(g, len(sizes), strategy=strategy, seed=9)
    assert max(result.betas) <= 1e-8
    assert {bp.union for bp in result.parts} == _component_labels(g)
    for bp in result.parts:
        for a, b, _, sign in g.edges():
            if {a, b} <= bp.union:
                assert ((a in bp.v1) == (b in bp.v1)) == (sign > 0)
    assert not result.diagnostics.tripwire_exceeded


def test_cluster_single_part(negative_triangle):
    result = cluster(negative_triangle, 1)
    assert len(result.parts) == 1
    assert result.betas[0] <= 1.0 + 1e-9
    assert result.diagnostics.sweep_guarantees[0] == pytest.approx(1.0, abs=1e-10)
    assert ClusterResponse.from_domain(result).diagnostics.separation is None


def test_antibalanced_mode_runs_on_the_negated_graph(two_components):
    flipped = negate(two_components)
    result = cluster(flipped, 2, mode=EmbeddingMode.ANTIBALANCED)
    assert result.betas == cluster(two_components, 2).betas
    assert result.mode == EmbeddingMode.ANTIBALANCED


def test_cluster_is_deterministic(two_components):
    first = ClusterResponse.from_domain(cluster(two_components, 2, seed=123)).model_dump_json()
    second = ClusterResponse.from_domain(cluster(two_components, 2, seed=123)).model_dump_json()
    assert first == second


def test_cluster_rejects_bad_arguments(two_components):
    with pytest.raises(IndexOutOfRange):
        cluster(two_components, 10)
    with pytest.raises(BadEpsilon):
        cluster(two_components, 2, epsilon=2.5)


def test_sweep_certificate_bounds_the_exact_constant():
    g = cycle_with_negative_edges(6)
    mu = VertexMeasure.degree(g)
    certificate = sweep_certificate(g, 1, mu)
    assert certificate.mode == CheegerMode.SWEEP_UPPER_BOUND
    assert certificate.value >= h_exact(g, 1, mu).value - 1e-12
    assert certificate.value == pytest.approx(beta(g, certificate.witness[0], mu))

    unit = VertexMeasure.unit(g)
    assert sweep_certificate(g, 1, unit).value >= h_exact(g, 1, unit).value - 1e-12
