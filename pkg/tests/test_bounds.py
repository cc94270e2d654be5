import numpy as np
import pytest

from signed_spectra.core.errors import EmptyEdgeSet
from signed_spectra.corpus import complete_signed, random_signed_graph
from signed_spectra.models.graph import SignedGraph
from signed_spectra.schemas.bounds import VIOLATION_TOLERANCE, BoundName, BoundReport, BoundStatus
from signed_spectra.services.bounds import (
    das_bound_kirchhoff,
    degree_sum_bound_kirchhoff,
    triangle_bounds_normalized,
    verify_all,
)
from signed_spectra.services.graph_core import build_graph


def test_compare_applies_the_shared_tolerance():
    assert BoundReport.compare(BoundName.SIGNED_CHEEGER_LOWER, 1.0, 1.0 - VIOLATION_TOLERANCE / 2).status == (
        BoundStatus.VERIFIED
    )
    report = BoundReport.compare(BoundName.SIGNED_CHEEGER_LOWER, 1.0, 0.5)
    assert report.status == BoundStatus.VIOLATED
    assert report.slack == -0.5
    assert BoundReport.compare(BoundName.SIGNED_CHEEGER_LOWER, 0.0, 1.0, vacuous=True).status == BoundStatus.VACUOUS


def test_triangle_bounds_are_tight_on_triangles(negative_triangle, positive_triangle):
    lower, upper = triangle_bounds_normalized(negative_triangle)
    assert lower.lhs == 0.5
    assert lower.rhs == pytest.approx(0.5, abs=1e-12)
    assert lower.slack == pytest.approx(0.0, abs=1e-12)
    assert lower.status == BoundStatus.VERIFIED
    assert upper.rhs == 2.0
    assert upper.status == BoundStatus.VACUOUS

    _, upper = triangle_bounds_normalized(positive_triangle)
    assert upper.rhs == 1.5
    assert upper.lhs == pytest.approx(1.5, abs=1e-12)


def test_triangle_free_graph_gives_vacuous_upper_bound(c5_one_negative):
    lower, upper = triangle_bounds_normalized(c5_one_negative)
    assert upper.rhs == 2.0
    assert upper.status == BoundStatus.VACUOUS
    assert lower.lhs == 0.0


@pytest.mark.parametrize("sign, expected", [(1, 3.0), (-1, 4.0)])
def test_kirchhoff_triangle_bound_is_tight_on_triangles(sign, expected):
    report = das_bound_kirchhoff(complete_signed(3, sign))
    assert report.rhs == expected
    assert report.slack == pytest.approx(0.0, abs=1e-9)
    assert report.status == BoundStatus.VERIFIED


def test_weighted_triangle_bound_never_exceeds_degree_sums(rng):
    for _ in range(20):
        g = random_signed_graph(rng, int(rng.integers(3, 9)))
        assert das_bound_kirchhoff(g).rhs <= degree_sum_bound_kirchhoff(g).rhs + 1e-12


def test_unweighted_reduction_is_checked(rng):
    for _ in range(10):
        g = random_signed_graph(rng, 7, unweighted=True)
        report = das_bound_kirchhoff(g)
        assert report.detail is not None
        assert report.status != BoundStatus.VIOLATED


def test_bounds_need_edges():
    empty = SignedGraph.from_signed_adjacency(np.zeros((2, 2)), ["a", "b"])
    with pytest.raises(EmptyEdgeSet):
        triangle_bounds_normalized(empty)
    with pytest.raises(EmptyEdgeSet):
        das_bound_kirchhoff(empty)
    for graph in (empty, SignedGraph.from_signed_adjacency(np.zeros((0, 0)), [])):
        with pytest.raises(EmptyEdgeSet):
            verify_all(graph)


def test_verify_all_on_negative_triangle(negative_triangle):
    reports = verify_all(negative_triangle)
    assert all(r.status != BoundStatus.VIOLATED for r in reports)
    checked = [r for r in reports if r.slack is not None]
    assert all(r.slack >= -VIOLATION_TOLERANCE for r in checked)
    names = {r.bound_name for r in reports}
    assert {
        BoundName.SIGNED_CHEEGER_LOWER,
        BoundName.SIGNED_CHEEGER_UPPER,
        BoundName.DUAL_CHEEGER_LOWER,
        BoundName.DUALITY_IDENTITY,
        BoundName.KIRCHHOFF_TRIANGLE_UPPER,
        BoundName.IMPROVED_CHEEGER_DISJUNCTION,
    } <= names


def test_verify_all_on_balanced_graph(two_components):
    reports = verify_all(two_components, k_max=2)
    cheeger = {r.bound_name: r for r in reports if r.k is None}
    assert cheeger[BoundName.SIGNED_CHEEGER_UPPER].lhs == 0.0
    assert cheeger[BoundName.SIGNED_CHEEGER_LOWER].lhs == pytest.approx(0.0, abs=1e-12)
    assert all(r.status != BoundStatus.VIOLATED for r in reports)
    vacuous = [r for r in reports if r.bound_name == BoundName.IMPROVED_CHEEGER and r.status == BoundStatus.VACUOUS]
    assert [r.k for r in vacuous] == [1, 2]


def test_verify_all_skips_items_beyond_the_budget(c5_one_negative):
    reports = verify_all(c5_one_negative, budget=10)
    skipped = {r.bound_name for r in reports if r.status == BoundStatus.SKIPPED}
    assert BoundName.SIGNED_CHEEGER_LOWER in skipped
    assert BoundName.DUAL_CHEEGER_LOWER in skipped
    assert any(r.bound_name == BoundName.KIRCHHOFF_TRIANGLE_UPPER for r in reports)


def test_informational_reports_never_violate(rng):
    g = random_signed_graph(rng, 6)
    informational = [r for r in verify_all(g) if r.status == BoundStatus.INFORMATIONAL]
    assert informational
    assert all(r.detail and "implied constant" in r.detail for r in informational)


def test_path_graph_reports():
    g = build_graph([("a", "b", 1.0), ("b", "c", -2.0)])
    assert all(r.status != BoundStatus.VIOLATED for r in verify_all(g))
