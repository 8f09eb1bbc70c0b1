import math

import numpy as np
import pytest

from confined_gps.potentials import Barrier, Coulomb, Davidson, Harmonic, PotentialSpec, evaluate, snap_barrier


def test_core_potentials():
    r = np.array([0.5, 1.0, 2.0])
    np.testing.assert_allclose(evaluate(PotentialSpec(Harmonic(4.0)), 0, r), 2.0 * r**2)
    np.testing.assert_allclose(evaluate(PotentialSpec(Coulomb(2.0)), 1, r), -2.0 / r + 1.0 / r**2)
    np.testing.assert_allclose(
        evaluate(PotentialSpec(Davidson(1.0, 1.0)), 2, r), r**2 / 2 + 1 / (2 * r**2) + 3 / r**2
    )


def test_scalar_input_gives_float():
    assert evaluate(PotentialSpec(Harmonic()), 0, 2.0) == pytest.approx(2.0)


def test_barrier_modes():
    r = np.array([1.0, 2.0, 3.0])
    plateau = PotentialSpec(Harmonic(), Barrier(2.0, 10.0))
    np.testing.assert_allclose(evaluate(plateau, 0, r), [0.5, 10.0, 10.0])
    step = PotentialSpec(Harmonic(), Barrier(2.0, 10.0, mode="step"))
    np.testing.assert_allclose(evaluate(step, 0, r), [0.5, 12.0, 14.5])


@pytest.mark.parametrize("bad", [lambda: Harmonic(0.0), lambda: Coulomb(-1.0), lambda: Davidson(1.0, -1.0),
                                 lambda: Barrier(-1.0, 1.0), lambda: Barrier(1.0, 1.0, mode="ramp")])
def test_validation(bad):
    with pytest.raises(ValueError):
        bad()


def test_rejects_origin():
    with pytest.raises(ValueError):
        evaluate(PotentialSpec(Coulomb()), 0, np.array([0.0, 1.0]))


def test_snap_barrier_and_units():
    spec = PotentialSpec(Harmonic(16.0), Barrier(1.04, 5.0))
    snapped = snap_barrier(spec, np.array([0.5, 1.0, 1.1]))
    assert snapped.barrier.radius == 1.0
    assert spec.oscillator_unit == 4.0
    assert PotentialSpec(Coulomb()).oscillator_unit == 1.0
    assert math.isclose(PotentialSpec(Davidson(9.0, 1.0)).oscillator_unit, 3.0)
