import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from confined_gps import _kernels_py, kernels

BACKENDS = kernels.available_backends()


def symmetric(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n))
    return (a + a.T) / 2


def test_backend_selection():
    assert kernels.BACKEND in ("compiled", "python")
    assert kernels.load_backend("python") is _kernels_py
    with pytest.raises(ValueError):
        kernels.load_backend("fortran")


@pytest.mark.parametrize("name", BACKENDS)
def test_legendre_pair(name):
    impl = kernels.load_backend(name)
    x = np.linspace(-1, 1, 9)
    p, q = impl.legendre_pair(4, x)
    np.testing.assert_allclose(p, (35 * x**4 - 30 * x**2 + 3) / 8, atol=1e-14)
    np.testing.assert_allclose(q, (5 * x**3 - 3 * x) / 2, atol=1e-14)


@pytest.mark.parametrize("name", BACKENDS)
@pytest.mark.parametrize("n", [1, 2, 3, 10, 57])
def test_tridiagonal_ql_reproduces_lapack(name, n):
    impl = kernels.load_backend(name)
    a = symmetric(n, n)
    d, e, q = impl.tridiagonalize(a, True)
    values, z, ok = impl.tql_implicit(d, e, q, 60)
    assert ok
    order = np.argsort(values)
    np.testing.assert_allclose(values[order], np.linalg.eigvalsh(a), atol=1e-12)
    z = z[:, order]
    np.testing.assert_allclose(a @ z, z * values[order], atol=1e-11)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled extension not built")
@settings(max_examples=25, deadline=None)
@given(arrays(np.float64, st.tuples(st.integers(2, 25), st.just(25)), elements=st.floats(-10, 10)))
def test_backends_agree(block):
    n = block.shape[0]
    a = block[:, :n]
    a = (a + a.T) / 2
    out = {}
    for name in BACKENDS:
        impl = kernels.load_backend(name)
        d, e, _ = impl.tridiagonalize(a, False)
        values, _, ok = impl.tql_implicit(d, e, None, 60)
        assert ok
        out[name] = np.sort(values)
    scale = max(1.0, np.abs(a).max())
    np.testing.assert_allclose(out["compiled"], out["python"], atol=1e-10 * scale * n)


@pytest.mark.parametrize("name", BACKENDS)
def test_input_is_not_modified(name):
    impl = kernels.load_backend(name)
    a = symmetric(6, 1)
    keep = a.copy()
    d, e, q = impl.tridiagonalize(a, True)
    impl.tql_implicit(d, e, q, 60)
    np.testing.assert_array_equal(a, keep)


def test_fallback_selected_when_extension_missing():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['confined_gps._kernels'] = None\n"
        "from confined_gps import kernels, confined_energies, PotentialSpec, Harmonic, ConfinementSpec\n"
        "assert kernels.BACKEND == 'python', kernels.BACKEND\n"
        "e = confined_energies(PotentialSpec(Harmonic()), 0, ConfinementSpec(0, 1.0))[0]\n"
        "assert abs(e - 5.07558201560823) < 1e-9, e\n"
    )
    subprocess.run([sys.executable, "-c", code], check=True)
