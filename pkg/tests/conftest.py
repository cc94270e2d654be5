import numpy as np
import pytest

from signed_spectra.corpus import (
    all_negative_triangle,
    all_positive_triangle,
    balanced_components,
    cycle_with_negative_edges,
)
from signed_spectra.io.graph_file import format_graph


@pytest.fixture
def negative_triangle():
    return all_negative_triangle()


@pytest.fixture
def positive_triangle():
    return all_positive_triangle()


@pytest.fixture
def c5_one_negative():
    return cycle_with_negative_edges(5)


@pytest.fixture
def two_components():
    return balanced_components((4, 5), seed=3)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph (or raw text or bytes) to a file and return its path."""

    def write(graph_or_text, name="graph.txt"):
        path = tmp_path / name
        if isinstance(graph_or_text, bytes):
            path.write_bytes(graph_or_text)
            return path
        text = graph_or_text if isinstance(graph_or_text, str) else format_graph(graph_or_text)
        path.write_text(text, encoding="utf-8")
        return path

    return write
