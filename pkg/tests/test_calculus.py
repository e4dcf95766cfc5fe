import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fractal_calc.calculus import (
    LITERAL_LIMIT,
    STIELTJES,
    Contour,
    IntegralScheme,
    check_ftc,
    contour_integral,
    crosses_branch_cut,
    lf_integral,
    lfd_numeric,
    partition_sum,
    path_gap,
)
from fractal_calc.errors import BranchCutError, DivergenceError, OrderError
from fractal_calc.gamma import gamma
from fractal_calc.series import FracPowerSeries, ml_series

from oracles import FTC_INTEGRAL_HALF


def random_cut_plane_polyline(rng, closed=False):
    """Polyline inside a convex region of the cut plane (right or upper half-plane)."""
    k = int(rng.integers(2, 7))
    if rng.random() < 0.5:
        pts = rng.uniform(0.05, 3.0, k) + 1j * rng.uniform(-3.0, 3.0, k)
    else:
        pts = rng.uniform(-3.0, 3.0, k) + 1j * rng.uniform(0.05, 3.0, k)
    pts = list(pts)
    if closed:
        pts.append(pts[0])
    return Contour(pts, closed=closed)


def one(z):
    return 1.0


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8, 1.0])
def test_telescoping_open(alpha):
    rng = np.random.default_rng(11)
    for _ in range(25):
        c = random_cut_plane_polyline(rng)
        value = contour_integral(one, c, alpha).value
        exact = (complex(c.end) ** alpha - complex(c.start) ** alpha) / gamma(1 + alpha)
        assert abs(value - exact) <= 1e-12


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8, 1.0])
def test_telescoping_closed(alpha):
    rng = np.random.default_rng(12)
    for _ in range(25):
        c = random_cut_plane_polyline(rng, closed=True)
        assert abs(contour_integral(one, c, alpha).value) <= 1e-12


def test_contour_validation():
    with pytest.raises(ValueError):
        Contour([1 + 1j])
    with pytest.raises(ValueError):
        Contour([1, 1, 2])
    with pytest.raises(ValueError):
        Contour([1, 2, 3], closed=True)
    with pytest.raises(ValueError):
        Contour.segment(0, 1) + Contour.segment(2, 3)
    joined = Contour.segment(1, 1j) + Contour.segment(1j, 2j)
    assert joined.points == (1, 1j, 2j)
    assert Contour([(1, 0), (0, 1)]).end == 1j


def test_branch_cut():
    assert crosses_branch_cut(Contour([1 + 1j, -2 - 1j]))
    assert crosses_branch_cut(Contour([-1, -2]))
    assert not crosses_branch_cut(Contour([0, 1 + 1j]))
    assert not crosses_branch_cut(Contour([1 + 1j, -1 - 1j]))  # through the origin only
    assert not crosses_branch_cut(Contour([1 + 1j, -1 + 1j, -1 + 2j]))
    assert not crosses_branch_cut(Contour([1 - 1j, 1 + 1j]))
    with pytest.raises(BranchCutError):
        contour_integral(one, Contour([-1 + 1j, -1 - 1j]), 0.5)
    # α = 1 has no cut
    v = contour_integral(one, Contour([-1 + 1j, -1 - 1j]), 1.0).value
    assert v == pytest.approx(-2j, abs=1e-14)


def test_ftc_oracle():
    F = FracPowerSeries((0.0, 0.0, 1.0), 0.5)
    c = Contour.segment(0, 1)
    value = lf_integral(lambda x: np.sqrt(x) / gamma(1.5), 0, 1, 0.5).value
    assert value == pytest.approx(FTC_INTEGRAL_HALF, abs=1e-6)
    assert check_ftc(F, c, 0.5) == pytest.approx(1 - FTC_INTEGRAL_HALF, abs=1e-6)


def test_ftc_classical_exact():
    F = ml_series(1.0, 30)
    c = Contour([0, 1 + 1j, 2])
    assert check_ftc(F, c, 1.0, IntegralScheme.stieltjes(4096)) <= 1e-10


def test_ftc_order_mismatch():
    with pytest.raises(OrderError):
        check_ftc(ml_series(0.5, 4), Contour.segment(0, 1), 0.6)


def test_classical_quadrature():
    r = lf_integral(lambda x: x * x, 0, 1, 1.0, IntegralScheme.stieltjes(100_000))
    assert r.value == pytest.approx(1 / 3, abs=1e-12)
    assert r.diagnostics.n == [6250, 12500, 25000, 50000, 100000]
    assert lf_integral(np.sin, 0, math.pi, 1.0).value == pytest.approx(2.0, abs=1e-8)


def test_adaptive_diagnostics():
    r = lf_integral(np.exp, 0, 1, 1.0)
    assert r.diagnostics.converged
    assert r.value == pytest.approx(math.e - 1, rel=1e-8)
    d = r.diagnostics.to_dict()
    assert d["scheme"] == "stieltjes" and d["converged"] is True
    assert len(d["n"]) == len(d["values"])


def test_adaptive_reports_nonconvergence_without_raising():
    r = lf_integral(lambda x: x**0.5, 0, 1, 0.5, IntegralScheme("stieltjes", n_max=256))
    assert not r.diagnostics.converged
    assert r.value == pytest.approx(FTC_INTEGRAL_HALF * gamma(1.5), rel=1e-2)


def test_literal_matches_stieltjes_at_alpha_one():
    nodes = np.linspace(0, 2, 101)
    assert partition_sum(np.cos, nodes, 1.0, "literal") == partition_sum(np.cos, nodes, 1.0, "stieltjes")


def test_literal_fixed_n_raw_sum():
    r = lf_integral(one, 0, 1, 0.5, IntegralScheme.literal(100))
    assert r.value == pytest.approx(100 * 0.01**0.5 / gamma(1.5), rel=1e-12)


def test_literal_limit_divergence():
    with pytest.raises(DivergenceError) as info:
        lf_integral(one, 0, 1, 0.5, LITERAL_LIMIT)
    diag = info.value.diagnostics
    assert diag.exponent == pytest.approx(0.5, abs=0.05)
    assert len(diag.n) >= 4
    ratios = np.diff(np.log(diag.values)) / math.log(2)
    assert np.allclose(ratios, 0.5, atol=1e-12)


def test_literal_limit_converges_at_alpha_one():
    r = lf_integral(np.exp, 0, 1, 1.0, LITERAL_LIMIT)
    assert r.value == pytest.approx(math.e - 1, rel=1e-7)


def test_scheme_parse():
    assert IntegralScheme.parse("stieltjes") == STIELTJES
    assert IntegralScheme.parse("literal:64") == IntegralScheme.literal(64)
    assert IntegralScheme.parse("literal-limit") == LITERAL_LIMIT
    for bad in ("literal", "trapezoid", "literal:x"):
        with pytest.raises(ValueError):
            IntegralScheme.parse(bad)


@given(st.floats(0.2, 1.0), st.floats(-3, 3), st.floats(-3, 3))
@settings(max_examples=40, deadline=None)
def test_linearity(alpha, a, b):
    s = IntegralScheme.stieltjes(1024)
    f, g = np.cos, np.exp
    lhs = lf_integral(lambda x: a * f(x) + b * g(x), 0.1, 2.0, alpha, s).value
    rhs = a * lf_integral(f, 0.1, 2.0, alpha, s).value + b * lf_integral(g, 0.1, 2.0, alpha, s).value
    assert lhs == pytest.approx(rhs, abs=1e-12 * (1 + abs(a) + abs(b)) * 10)


@pytest.mark.parametrize("alpha", [0.4, 0.7, 1.0])
def test_interval_additivity(alpha):
    s = IntegralScheme.stieltjes(4096)
    whole = lf_integral(np.exp, 0.5, 2.0, alpha, s).value
    parts = lf_integral(np.exp, 0.5, 1.2, alpha, s).value + lf_integral(np.exp, 1.2, 2.0, alpha, s).value
    assert whole == pytest.approx(parts, rel=1e-9)


@pytest.mark.parametrize("alpha", [0.5, 1.0])
def test_path_concatenation(alpha):
    s = IntegralScheme.stieltjes(2048)
    f = lambda z: np.exp(-z)
    c1, c2 = Contour([1, 1 + 1j]), Contour([1 + 1j, 2 + 0.5j, 3])
    whole = contour_integral(f, c1 + c2, alpha, s).value
    parts = contour_integral(f, c1, alpha, s).value + contour_integral(f, c2, alpha, s).value
    assert abs(whole - parts) <= 1e-12


def test_path_independence_classical():
    f = lambda z: np.exp(z)
    gap = path_gap(f, Contour([0, 2 + 2j]), Contour([0, 2, 2 + 2j]), 1.0, IntegralScheme.stieltjes(4096))
    assert gap <= 1e-9


def test_integral_validation():
    with pytest.raises(ValueError):
        lf_integral(one, 1, 0, 0.5)
    with pytest.raises(ValueError):
        lf_integral(one, -1, 0, 0.5)
    assert lf_integral(one, 1, 1, 0.5).value == 0.0


def test_lfd_numeric_classical():
    r = lfd_numeric(np.sin, 0.0, 1.0)
    assert r.converged and r.estimate == pytest.approx(1.0, rel=1e-6)
    assert lfd_numeric(np.exp, 1.0, 1.0).estimate == pytest.approx(math.e, rel=1e-5)


def test_lfd_numeric_power_at_origin():
    # x^α at 0 has local fractional derivative Γ(1+α)
    r = lfd_numeric(lambda x: x**0.5, 0.0, 0.5)
    assert r.converged and r.estimate == pytest.approx(gamma(1.5), rel=1e-12)


def test_lfd_numeric_smooth_interior_vanishes():
    # for α < 1 a smooth function has zero limit derivative at interior points; the quotients shrink like h^(1-α)
    r = lfd_numeric(np.exp, 1.0, 0.5, h_schedule=[2.0**-m for m in range(4, 30)], rtol=1e-12)
    tr = np.array(r.trace)
    slope = np.polyfit(np.log(2.0 ** -np.arange(4, 30)), np.log(tr), 1)[0]
    assert slope == pytest.approx(0.5, abs=0.02)


def test_lfd_numeric_validation():
    with pytest.raises(ValueError):
        lfd_numeric(np.exp, -1.0, 0.5)
    with pytest.raises(ValueError):
        lfd_numeric(np.exp, 1.0, 0.5, h_schedule=[0.1, 0.0])


@pytest.mark.parametrize("scheme", [IntegralScheme.stieltjes(1024), IntegralScheme.literal(1024)])
def test_linearity_every_fixed_scheme(scheme):
    a, b = 2.5, -1.25
    lhs = lf_integral(lambda x: a * np.cos(x) + b * np.exp(x), 0.0, 2.0, 0.6, scheme).value
    rhs = a * lf_integral(np.cos, 0.0, 2.0, 0.6, scheme).value + b * lf_integral(np.exp, 0.0, 2.0, 0.6, scheme).value
    assert lhs == pytest.approx(rhs, rel=1e-10)


def test_schemes_agree_classically():
    exact = math.e - 1
    values = [
        lf_integral(np.exp, 0, 1, 1.0).value,
        lf_integral(np.exp, 0, 1, 1.0, IntegralScheme.literal(1_000_000)).value,
        lf_integral(np.exp, 0, 1, 1.0, LITERAL_LIMIT).value,
    ]
    assert all(abs(v - exact) <= 1e-6 for v in values)


def test_fixed_partition_convergence_flag():
    smooth = lf_integral(lambda x: x * x + 1, 0, 1, 0.5, IntegralScheme.stieltjes(4096)).diagnostics
    assert smooth.converged
    # x^α against d(x^α) at α = 1/2 carries an h·log h error term that
    # power-law extrapolation cannot remove; the flag must say so
    rough = lf_integral(np.sqrt, 0, 1, 0.5, IntegralScheme.stieltjes(65536)).diagnostics
    assert not rough.converged and rough.error_estimate > 1e-8
