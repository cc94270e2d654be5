import numpy as np

from signed_spectra.corpus import (
    NAMED_GRAPHS,
    balanced_components,
    disjoint_union,
    random_corpus,
    random_signed_graph,
    write_reference_graphs,
)
from signed_spectra.io.graph_file import read_graph
from signed_spectra.services.graph_core import connected_components, is_balanced


def test_random_corpus_is_reproducible():
    first = random_corpus(seed=5, count=8, max_n=7)
    second = random_corpus(seed=5, count=8, max_n=7)
    assert first == second
    assert all(3 <= g.vertex_count <= 7 for g in first)


def test_random_graphs_have_no_isolated_vertices(rng):
    for _ in range(30):
        g = random_signed_graph(rng, 6, edge_prob=0.05)
        assert np.all(g.degrees > 0)


def test_random_graph_options(rng):
    g = random_signed_graph(rng, 5, complete=True, unweighted=True, negative_prob=1.0)
    assert g.edge_count == 10
    assert np.all(g.signs[g.weights > 0] == -1)
    assert np.all(g.weights[g.weights > 0] == 1.0)


def test_balanced_components_are_connected_and_balanced():
    g = balanced_components((3, 4, 5), seed=8)
    assert [c.size for c in connected_components(g)] == [3, 4, 5]
    assert is_balanced(g)


def test_disjoint_union_prefixes_labels(negative_triangle, positive_triangle):
    g = disjoint_union([negative_triangle, positive_triangle])
    assert g.labels[:3] == ("0.a", "0.b", "0.c")
    assert g.labels[3:] == ("1.a", "1.b", "1.c")
    assert g.edge_count == 6


def test_reference_graphs_written_once(tmp_path):
    write_reference_graphs(tmp_path)
    for name in NAMED_GRAPHS:
        assert read_graph(tmp_path / f"{name}.txt").edge_count > 0
    stamp = (tmp_path / "cycle5_one_negative.txt").stat().st_mtime_ns
    write_reference_graphs(tmp_path)
    assert (tmp_path / "cycle5_one_negative.txt").stat().st_mtime_ns == stamp
