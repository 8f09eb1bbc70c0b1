import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from confined_gps.eigensolver import Spectrum, eigen_symmetric
from confined_gps.errors import ConvergenceError
from confined_gps import kernels

METHODS = ["householder-ql", "lapack"]


@pytest.mark.parametrize("method", METHODS)
def test_small_closed_forms(method):
    values, _ = eigen_symmetric([[2.0, 1.0], [1.0, 2.0]], method=method)
    np.testing.assert_allclose(values, [1.0, 3.0], atol=1e-14)
    values, vecs = eigen_symmetric(np.eye(5), vectors=True, method=method)
    np.testing.assert_allclose(values, np.ones(5))
    np.testing.assert_allclose(vecs.T @ vecs, np.eye(5), atol=1e-14)


def test_three_by_three_against_characteristic_cubic():
    a = np.array([[4.0, 1.0, -2.0], [1.0, 2.0, 0.5], [-2.0, 0.5, 3.0]])
    # coefficients of det(lambda I - A)
    c2 = -np.trace(a)
    c1 = 0.5 * (np.trace(a) ** 2 - np.trace(a @ a))
    c0 = -np.linalg.det(a)
    roots = np.sort(np.roots([1.0, c2, c1, c0]).real)
    values, _ = eigen_symmetric(a)
    np.testing.assert_allclose(values, roots, atol=1e-12)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        eigen_symmetric([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        eigen_symmetric(np.ones((2, 3)))
    with pytest.raises(ValueError):
        eigen_symmetric(np.eye(2), method="jacobi")


def test_empty_matrix():
    values, vecs = eigen_symmetric(np.zeros((0, 0)), vectors=True)
    assert values.shape == (0,) and vecs.shape == (0, 0)


def test_nonconvergence_is_signalled(monkeypatch):
    import confined_gps.eigensolver as es

    monkeypatch.setattr(es, "QL_MAX_ITER", 0)
    with pytest.raises(ConvergenceError):
        eigen_symmetric(np.array([[1.0, 2.0], [2.0, -1.0]]))


@settings(max_examples=40, deadline=None)
@given(arrays(np.float64, st.tuples(st.integers(1, 30), st.just(30)), elements=st.floats(-1e3, 1e3)))
def test_trace_residual_orthogonality(block):
    n = block.shape[0]
    a = (block[:, :n] + block[:, :n].T) / 2
    values, vecs = eigen_symmetric(a, vectors=True)
    norm = max(np.linalg.norm(a, 2), 1e-300)
    assert np.all(np.diff(values) >= 0)
    assert abs(values.sum() - np.trace(a)) <= 1e-9 * max(1.0, np.abs(np.diag(a)).sum(), norm * n)
    assert np.max(np.linalg.norm(a @ vecs - vecs * values, axis=0), initial=0.0) <= 1e-10 * max(norm, 1.0)
    np.testing.assert_allclose(vecs.T @ vecs, np.eye(n), atol=1e-10)


def test_determinism():
    rng = np.random.default_rng(7)
    a = rng.normal(size=(40, 40))
    a = a + a.T
    v1, z1 = eigen_symmetric(a, vectors=True)
    v2, z2 = eigen_symmetric(a, vectors=True)
    assert v1.tobytes() == v2.tobytes() and z1.tobytes() == z2.tobytes()


@pytest.mark.parametrize("backend", kernels.available_backends())
def test_backends_on_default_hamiltonian(backend):
    from confined_gps.coordinate_map import AlgebraicMap, build_mapped_grid
    from confined_gps.hamiltonian import assemble
    from confined_gps.potentials import Harmonic, PotentialSpec

    h = assemble(build_mapped_grid(AlgebraicMap(), 300), PotentialSpec(Harmonic()), 0).matrix
    values, _ = eigen_symmetric(h, backend=backend)
    np.testing.assert_allclose(values[:5], [1.5, 3.5, 5.5, 7.5, 9.5], atol=1e-10)


def test_spectrum_labels():
    s = Spectrum(np.array([1.0, 2.0]), 3)
    assert s.labels == [(0, 3), (1, 3)]
    assert s.energy(1) == 2.0 and len(s) == 2
