import numpy as np
import pytest

from signed_spectra.core.config import settings
from signed_spectra.core.errors import ConvergenceFailure
from signed_spectra.services.eigensolver import _round_robin, eigh, fix_signs, jacobi_eigh

MATRIX_DIMENSION = 7


@pytest.fixture
def symmetric(rng):
    a = rng.normal(size=(MATRIX_DIMENSION, MATRIX_DIMENSION))
    return (a + a.T) / 2.0


def test_jacobi_matches_lapack(symmetric):
    values, vectors = jacobi_eigh(symmetric)
    assert np.allclose(values, np.linalg.eigvalsh(symmetric), atol=1e-10)
    assert np.all(np.diff(values) >= 0)
    assert np.allclose(vectors.T @ vectors, np.eye(MATRIX_DIMENSION), atol=1e-10)
    assert np.allclose(symmetric @ vectors, vectors * values, atol=1e-9)


def test_jacobi_keeps_blocks_separate():
    block = np.array([[1.0, -1.0], [-1.0, 1.0]])
    matrix = np.zeros((4, 4))
    matrix[:2, :2] = block
    matrix[2:, 2:] = 2.0 * block
    _, vectors = jacobi_eigh(matrix)
    for column in vectors.T:
        support = np.abs(column) > 0
        assert not (support[:2].any() and support[2:].any())


def test_jacobi_reports_non_convergence(symmetric):
    with pytest.raises(ConvergenceFailure):
        jacobi_eigh(symmetric, max_sweeps=0)


def test_eigh_dispatches_on_settings(symmetric, monkeypatch):
    monkeypatch.setattr(settings, "EIGENSOLVER", "lapack")
    values, _ = eigh(symmetric)
    assert np.allclose(values, np.linalg.eigvalsh(symmetric))


def test_fix_signs_makes_first_nonzero_entry_positive():
    vectors = np.array([[0.0, -1.0], [-1.0, 0.5]])
    fixed = fix_signs(vectors)
    assert np.array_equal(fixed, [[0.0, 1.0], [1.0, -0.5]])


@pytest.mark.parametrize("n", [1, 2, 5, 8, 13])
def test_round_robin_covers_each_pair_once(n):
    seen = []
    for p, q in _round_robin(n):
        members = np.concatenate([p, q])
        assert np.unique(members).size == members.size
        assert np.all(p < q)
        seen += list(zip(p.tolist(), q.tolist()))
    assert sorted(seen) == [(p, q) for p in range(n) for q in range(p + 1, n)]


def test_jacobi_on_larger_matrix(rng):
    a = rng.normal(size=(120, 120))
    a = (a + a.T) / 2.0
    values, vectors = jacobi_eigh(a)
    assert np.allclose(values, np.linalg.eigvalsh(a), atol=1e-9)
    assert np.allclose(vectors.T @ vectors, np.eye(120), atol=1e-9)
    assert np.allclose(a @ vectors, vectors * values, atol=1e-8)


def test_jacobi_is_deterministic(symmetric):
    first = jacobi_eigh(symmetric)
    second = jacobi_eigh(symmetric)
    assert np.array_equal(first[0], second[0])
    assert np.array_equal(first[1], second[1])
