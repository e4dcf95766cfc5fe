import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fractal_calc.errors import DomainError, OrderError
from fractal_calc.fcomplex import FractionalComplex, from_coordinates, i_alpha, polar_decompose, real_root
from fractal_calc.mittag_leffler import cos_alpha, sin_alpha

from oracles import POLAR_0P8_RESIDUAL, POLAR_0P8_THETA

parts = st.floats(-1e3, 1e3, allow_nan=False)
orders = st.sampled_from([0.3, 0.5, 0.8, 1.0])


def fc(a, b, alpha=0.7):
    return FractionalComplex(a, b, alpha)


def test_unit_squares_to_minus_one():
    for alpha in (0.2, 0.5, 1.0):
        assert i_alpha(alpha) * i_alpha(alpha) == FractionalComplex(-1.0, 0.0, alpha)


def test_conjugate_product():
    assert fc(1, 1) * fc(1, -1) == fc(2, 0)


def test_conj_and_modulus():
    z = fc(3, 4)
    assert z.conj() == fc(3, -4)
    assert z.conj().conj() == z
    assert fc(2.5, 0).conj() == fc(2.5, 0)
    assert z.modulus() == 5.0
    assert fc(0, 0).modulus() == 0.0


def test_order_mismatch():
    with pytest.raises(OrderError):
        fc(1, 1, 0.5) + fc(1, 1, 0.6)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        fc(1, 1) / fc(0, 0)


def test_scalar_mixing():
    z = fc(1, 2)
    assert 2 * z == fc(2, 4)
    assert z + 1 == fc(2, 2)
    assert 1 - z == fc(0, -2)


def test_str():
    assert str(fc(1, -2)) == "1 - i^a 2"


def test_coordinates():
    z = from_coordinates(4.0, 9.0, 0.5)
    assert (z.a, z.b) == (2.0, 3.0)
    assert real_root(z.a, 0.5) == 4.0
    with pytest.raises(DomainError):
        from_coordinates(-1.0, 1.0, 0.5)


@given(parts, parts, parts, parts, parts, parts, orders)
@settings(max_examples=300)
def test_ring_axioms(a1, b1, a2, b2, a3, b3, alpha):
    x, y, z = FractionalComplex(a1, b1, alpha), FractionalComplex(a2, b2, alpha), FractionalComplex(a3, b3, alpha)
    scale = max(1.0, x.modulus() * y.modulus() * z.modulus(), x.modulus() * (y.modulus() + z.modulus()))
    assert ((x * y) * z - x * (y * z)).modulus() <= 1e-12 * scale
    assert (x * (y + z) - (x * y + x * z)).modulus() <= 1e-12 * scale


@given(parts, parts, parts, parts, orders)
@settings(max_examples=300)
def test_modulus_multiplicative(a1, b1, a2, b2, alpha):
    x, y = FractionalComplex(a1, b1, alpha), FractionalComplex(a2, b2, alpha)
    assert (x * y).modulus() == pytest.approx(x.modulus() * y.modulus(), rel=1e-12, abs=1e-300)
    assert x.conj().modulus() == x.modulus()


@given(parts, parts, parts, parts, orders)
@settings(max_examples=300)
def test_division_inverts_multiplication(a1, b1, a2, b2, alpha):
    x, y = FractionalComplex(a1, b1, alpha), FractionalComplex(a2, b2, alpha)
    if y.modulus() < 1e-6:
        return
    back = (x * y) / y
    assert (back - x).modulus() <= 1e-10 * max(1.0, x.modulus())


def test_polar_classical():
    r, theta, res = polar_decompose(FractionalComplex(1, 1, 1.0))
    assert r == pytest.approx(math.sqrt(2))
    assert theta == pytest.approx(math.pi / 4, abs=1e-9)
    assert res <= 1e-9


def test_polar_positive_real_axis():
    r, theta, res = polar_decompose(FractionalComplex(2.0, 0.0, 0.6))
    assert theta == 0.0 and res <= 1e-12


def test_polar_fractional_matches_dense_grid():
    r, theta, res = polar_decompose(FractionalComplex(1, 1, 0.8))
    assert r == pytest.approx(math.sqrt(2))
    assert res == pytest.approx(POLAR_0P8_RESIDUAL, abs=1e-9)
    assert theta == pytest.approx(POLAR_0P8_THETA, abs=1e-6)


def test_polar_round_trip_classical():
    rng = np.random.default_rng(7)
    for a, b in rng.uniform(-3, 3, (50, 2)):
        r, theta, _ = polar_decompose(FractionalComplex(a, b, 1.0))
        assert r * cos_alpha(1.0, theta) == pytest.approx(a, abs=1e-9)
        assert r * sin_alpha(1.0, theta) == pytest.approx(b, abs=1e-9)


def test_polar_zero():
    with pytest.raises(ZeroDivisionError):
        polar_decompose(FractionalComplex(0, 0, 0.5))
