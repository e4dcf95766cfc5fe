import math

import numpy as np
import pytest

from fractal_calc.calculus import IntegralScheme, LITERAL_LIMIT
from fractal_calc.errors import DivergenceError
from fractal_calc.fcomplex import FractionalComplex
from fractal_calc.transforms import QuadSpec, lf_fourier, lf_laplace, signed_power

from oracles import FOURIER_INDICATOR_HALF, LAPLACE_INDICATOR_HALF


def gaussian(x):
    return np.exp(-np.asarray(x) ** 2)


def indicator(x):
    x = np.asarray(x)
    return ((x >= 0) & (x <= 1)).astype(float)


def test_classical_laplace():
    r = lf_laplace(lambda x: np.exp(-x), 1.0, 1.0)
    # midpoint rule: error h^2/24 * ∫ (e^{-2x})'' = 1.33e-8 at h = 4e-4
    assert r.value == pytest.approx(0.5 - 4e-4**2 / 12, abs=1e-12)
    assert abs(r.value - 0.5) <= r.step
    assert lf_laplace(lambda x: 1.0, 2.0, 1.0).value == pytest.approx(0.5, abs=1e-7)
    assert lf_laplace(indicator, 1.0, 1.0).value == pytest.approx(1 - math.exp(-1), abs=1e-4)


def test_classical_fourier():
    r = lf_fourier(gaussian, 1.0, 1.0)
    assert isinstance(r.value, FractionalComplex)
    assert abs(complex(r.value) - math.sqrt(math.pi) * math.exp(-0.25)) <= 1e-10
    # indicator: (1 - e^{-iω})/(iω)
    ind = complex(lf_fourier(indicator, 2.0, 1.0).value)
    assert ind == pytest.approx((1 - np.exp(-2j)) / 2j, abs=1e-6)


def test_fourier_zero_frequency_collapses_to_integral():
    value = lf_fourier(gaussian, 0.0, 0.6).value
    assert value.b == pytest.approx(0.0, abs=1e-15)
    spec = QuadSpec(cutoff=8.0, n=2**16)
    v1 = lf_fourier(gaussian, 0.0, 0.6, spec).value
    assert v1.a > 0


@pytest.mark.parametrize("alpha", [0.5, 0.8, 1.0])
def test_linearity(alpha):
    q = QuadSpec(cutoff=20.0, n=20_000)
    f, g = (lambda x: np.exp(-x)), (lambda x: np.exp(-2 * np.asarray(x) ** 2))
    a, b = 1.7, -0.6
    lhs = lf_laplace(lambda x: a * f(x) + b * g(x), 1.3, alpha, q, check=False).value
    rhs = a * lf_laplace(f, 1.3, alpha, q, check=False).value + b * lf_laplace(g, 1.3, alpha, q, check=False).value
    assert abs(lhs - rhs) <= 1e-10 * abs(lhs)
    lhs = complex(lf_fourier(lambda x: a * gaussian(x) + b * g(x), 0.7, alpha, q).value)
    rhs = a * complex(lf_fourier(gaussian, 0.7, alpha, q).value) + b * complex(lf_fourier(g, 0.7, alpha, q).value)
    assert abs(lhs - rhs) <= 1e-10 * abs(lhs)


def test_fractional_indicator_against_oracle():
    lap = lf_laplace(indicator, 1.0, 0.5)
    assert abs(lap.value - LAPLACE_INDICATOR_HALF) <= min(lap.step, 1e-5)
    fou = lf_fourier(indicator, 1.0, 0.5)
    assert abs(complex(fou.value) - FOURIER_INDICATOR_HALF) <= min(fou.step, 1e-5)
    # a grid that misses the jump at x = 1 is first order but still within 1e-4
    off = QuadSpec(cutoff=40.0, n=2**17)
    assert lf_laplace(indicator, 1.0, 0.5, off).value == pytest.approx(LAPLACE_INDICATOR_HALF, abs=1e-4)
    assert complex(lf_fourier(indicator, 1.0, 0.5, off).value) == pytest.approx(FOURIER_INDICATOR_HALF, abs=1e-4)


@pytest.mark.parametrize("alpha", [0.5, 1.0])
def test_refinement_stability(alpha):
    f = lambda x: np.exp(-x)
    coarse = lf_laplace(f, 1.0, alpha, QuadSpec(cutoff=40.0, n=50_000), check=False)
    fine = lf_laplace(f, 1.0, alpha, QuadSpec(cutoff=40.0, n=100_000), check=False)
    assert abs(fine.value - coarse.value) <= 4 * (coarse.step + coarse.tail) + 1e-15


def test_laplace_divergence_for_constant():
    with pytest.raises(DivergenceError) as info:
        lf_laplace(lambda x: 1.0, 1.0, 0.5)
    assert info.value.diagnostics["cutoff"] == [40.0, 80.0]


def test_literal_scheme():
    f = lambda x: np.exp(-x)
    lit = QuadSpec(scheme=IntegralScheme.literal(100_000))
    assert lf_laplace(f, 1.0, 1.0, lit).value == lf_laplace(f, 1.0, 1.0).value
    # (Δx)^α overweights every cell for α < 1
    assert lf_laplace(f, 1.0, 0.5, lit, check=False).value > 10 * lf_laplace(f, 1.0, 0.5).value


def test_quadspec_validation():
    with pytest.raises(ValueError):
        QuadSpec(cutoff=0)
    with pytest.raises(ValueError):
        QuadSpec(n=4)
    with pytest.raises(ValueError):
        QuadSpec(scheme=LITERAL_LIMIT)
    with pytest.raises(ValueError):
        lf_laplace(np.exp, 0.0, 0.5)


def test_signed_power():
    assert np.allclose(signed_power([-4.0, 0.0, 9.0], 0.5), [-2.0, 0.0, 3.0])
