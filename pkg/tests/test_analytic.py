import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import eval_genlaguerre, roots_genlaguerre

from confined_gps import analytic
from confined_gps.degeneracy import Numerics, confined_spectrum
from confined_gps.potentials import Davidson, Harmonic, PotentialSpec


def test_free_energies():
    assert analytic.free_iho_energy(0, 0) == 1.5
    assert analytic.free_iho_energy(2, 3) == 8.5
    assert analytic.free_hydrogen_energy(2) == -0.125
    assert analytic.davidson_energy(1, 0, 1.0) == pytest.approx(4.118033988749895)
    with pytest.raises(ValueError):
        analytic.free_iho_energy(-1, 0)
    with pytest.raises(ValueError):
        analytic.free_hydrogen_energy(0)


def test_effective_ell_identity():
    for ell in range(4):
        for lam in (0.0, 0.5, 1.0, 7.0):
            le = analytic.effective_ell(ell, lam)
            assert le * (le + 1) == pytest.approx(ell * (ell + 1) + lam)
    assert analytic.effective_ell(2, 0.0) == pytest.approx(2.0)


def test_davidson_node():
    assert analytic.davidson_first_node(0, 1.0) == pytest.approx(1.45535, abs=5e-6)
    assert analytic.davidson_first_node(0, 0.0) == pytest.approx(math.sqrt(1.5))
    expect = math.sqrt((2 * (-0.5 + math.sqrt(9 / 4 + 1)) + 3) / 2)
    assert analytic.davidson_first_node(1, 1.0) == pytest.approx(expect)


def eigvec_nodes(spec, ell, n, r_cut=6.0):
    """Sign changes of the n-th eigenvector inside r_cut, located on the spectral interpolant."""
    spectrum, h = confined_spectrum(spec, ell, vectors=True, numerics=Numerics(300, 25.0, 40.0))
    grid = h.grid
    f = np.zeros(grid.order + 1)
    # u(r(x)) = f(x) / sqrt(r'(x)) with nodal values f_j = c_j / sqrt(w_j)
    f[1:-1] = spectrum.vectors[:, n] / np.sqrt(grid.weights[1:-1])
    sign_of = lambda x: grid.lobatto.interpolate(f, x)[0]
    x = grid.lobatto.nodes
    roots = []
    for i in range(1, grid.order - 1):
        if grid.radii[i + 1] > r_cut:
            break
        if f[i] * f[i + 1] < 0:
            lo, hi = x[i], x[i + 1]
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                if sign_of(mid) * f[i] > 0:
                    lo = mid
                else:
                    hi = mid
            roots.append(float(grid.map(0.5 * (lo + hi))[0]))
    return roots


def test_davidson_node_matches_eigenvector_sign_change():
    roots = eigvec_nodes(PotentialSpec(Davidson(1.0, 1.0)), 1, 1)
    assert roots == pytest.approx([analytic.davidson_first_node(1, 1.0)], abs=1e-4)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 12), a=st.floats(-0.5, 8.0))
def test_laguerre_roots_against_scipy(n, a):
    ours = analytic.laguerre_roots(n, a)
    ref = np.sort(roots_genlaguerre(n, a)[0])
    np.testing.assert_allclose(ours, ref, rtol=1e-11, atol=1e-12)
    # residual over slope bounds the distance to the true root
    _, slope = analytic.laguerre(n, a, ours)
    assert np.all(np.abs(eval_genlaguerre(n, a, ours) / slope) < 1e-12 * np.maximum(1.0, ours))


def test_node_residuals_in_use_range():
    for n in (1, 2, 3):
        for ell in range(4):
            t = np.array(analytic.iho_nodes(n, ell).nodes) ** 2
            assert np.max(np.abs(eval_genlaguerre(n, ell + 0.5, t))) < 1e-10


def test_laguerre_values():
    t = np.linspace(0, 5, 11)
    val, der = analytic.laguerre(4, 1.5, t)
    np.testing.assert_allclose(val, eval_genlaguerre(4, 1.5, t), rtol=1e-12, atol=1e-12)
    # d/dt L_n^a = -L_{n-1}^{a+1}
    np.testing.assert_allclose(der[1:], -eval_genlaguerre(3, 2.5, t[1:]), rtol=1e-11)


@pytest.mark.parametrize("n,ell,expected", [
    (1, 0, [1.224745]), (2, 0, [0.958572, 2.020183]), (3, 2, [1.350859, 2.194025, 3.140292]),
])
def test_iho_nodes_examples(n, ell, expected):
    np.testing.assert_allclose(analytic.iho_nodes(n, ell).nodes, expected, atol=5e-7)


@given(n=st.integers(1, 4), ell=st.integers(0, 4))
def test_node_scaling_with_k(n, ell):
    base = np.array(analytic.iho_nodes(n, ell).nodes)
    np.testing.assert_allclose(analytic.iho_nodes(n, ell, 16.0).nodes, base / 2.0, rtol=1e-14)


def test_first_node_closed_form():
    for ell in range(5):
        assert analytic.iho_nodes(1, ell).nodes[0] == pytest.approx(math.sqrt((2 * ell + 3) / 2), rel=1e-14)


def test_nodes_match_free_eigenvectors():
    for n, ell in ((2, 0), (3, 1)):
        crossings = eigvec_nodes(PotentialSpec(Harmonic()), ell, n)
        np.testing.assert_allclose(crossings, analytic.iho_nodes(n, ell).nodes, atol=1e-4)


def test_invalid_node_requests():
    with pytest.raises(ValueError):
        analytic.iho_nodes(0, 0)
    with pytest.raises(ValueError):
        analytic.iho_nodes(1, 0, k=0.0)
