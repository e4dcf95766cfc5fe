"""Registry of identities of local fractional calculus, measured on grids.

Each claim evaluates both sides of an identity (or a residual functional)
pointwise over a parameter grid and reports the largest absolute gap. At
α = 1 every identity must hold to 1e-9, except the quotient rule with a plus
sign, which is kept precisely so that its failure is on record. For α < 1
claims are report-only: several identities are false there, and the
harness measures rather than endorses.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .calculus import Contour, IntegralScheme, check_ftc, contour_integral, partition_sum, path_gap
from .errors import FractalCalcError, DomainError
from .expr import CosA, Compose, Div, FracMonomial, MLExp, Mul, SinA, Var, evaluate, lfd_symbolic
from .fcomplex import FractionalComplex, polar_decompose
from .gamma import as_alpha, gamma
from .geometry import FCircleSpec, circle_param, sphere_param
from .mittag_leffler import ml, ml_arg, mittag_leffler
from .series import FracPowerSeries, cos_series, lfd, ml_series, monomial, sin_series

__all__ = [
    "ClaimReport",
    "Claim",
    "REGISTRY",
    "claim_ids",
    "run_claim",
    "run_all",
    "hoelder_estimate",
    "hoelder_bound",
    "CLASSICAL_TOL",
]

CLASSICAL_TOL = 1e-9
_FIXED_PIECES = IntegralScheme.stieltjes(1024)


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    eq: str
    alpha: float
    grid_description: str
    max_residual: float
    tolerance: float
    status: str

    def to_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "eq": self.eq,
            "alpha": self.alpha,
            "grid": self.grid_description,
            "max_residual": None if math.isnan(self.max_residual) else self.max_residual,
            "tol": None if math.isinf(self.tolerance) else self.tolerance,
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


@dataclass(frozen=True)
class Claim:
    claim_id: str
    identity: str
    measure: Callable  # (alpha, grid: dict, rng) -> (residuals, description)
    defaults: dict


# --- Hölder ----------------------------------------------------------------------

def hoelder_estimate(f, alpha, sample_points) -> float:
    """max over pairs of |f(z1) - f(z2)| / |z1 - z2|^α, skipping coincident pairs."""
    a = as_alpha(alpha)
    z = np.asarray(sample_points)
    z = z.astype(complex) if np.iscomplexobj(z) else z.astype(float)
    if z.size < 2:
        raise DomainError("need at least two sample points")
    fz = np.asarray(f(z))
    best = -np.inf
    for i in range(z.size - 1):
        d = np.abs(z[i + 1:] - z[i])
        keep = d > 0
        if keep.any():
            q = np.abs(fz[i + 1:][keep] - fz[i]) / d[keep] ** a
            best = max(best, float(q.max()))
    if best == -np.inf:
        raise DomainError("all sample points coincide")
    return best


def hoelder_bound(alpha, extent: float = 1.0, terms: int = 200) -> float:
    """Σ_{k>=1} max(1, kα) X^{(k-1)α} / Γ(1+kα): a Hölder constant of E_α(x^α) on [0, X].

    Each term bounds |x^{kα} - y^{kα}| / |x - y|^α on [0, X]: by Hölder
    continuity when kα <= 1 and by the mean value theorem otherwise.
    """
    a = as_alpha(alpha)
    total = 0.0
    for k in range(1, terms + 1):
        term = max(1.0, k * a) * extent ** ((k - 1) * a) / gamma(1.0 + k * a) if k * a < 170 else 0.0
        total += term
        if term < 1e-17 * total:
            break
    return total


# --- claim measurements ----------------------------------------------------------------

def _E(a, w):
    return mittag_leffler(a, np.asarray(w, dtype=complex))


def _grid_text(grid: dict) -> str:
    parts = []
    for key, val in grid.items():
        if isinstance(val, (list, tuple, np.ndarray)):
            vals = ", ".join(f"{complex(v).real:g}" if np.isreal(v) else f"{complex(v):g}" for v in val)
            parts.append(f"{key}=[{vals}]")
        else:
            parts.append(f"{key}={val}")
    return "; ".join(parts)


def _pairs(xs, ys):
    x, y = np.meshgrid(np.asarray(xs, float), np.asarray(ys, float), indexing="ij")
    return x.ravel(), y.ravel()


def _sem_real(a, g, rng):
    x, y = _pairs(g["x"], g["y"])
    res = []
    for lam in g["lam"]:
        la = lam**a
        lhs = _E(a, la * x**a) * _E(a, la * y**a)
        rhs = _E(a, la * (x + y) ** a)
        res.append(np.abs(lhs - rhs))
    return np.concatenate(res)


def _sem_imag(a, g, rng):
    x, y = _pairs(g["x"], g["y"])
    return np.abs(_E(a, 1j * x**a) * _E(a, 1j * y**a) - _E(a, 1j * (x + y) ** a))


def _sem_mixed(a, g, rng):
    x, y = _pairs(g["x"], g["y"])
    return np.abs(_E(a, x**a) * _E(a, 1j * y**a) - _E(a, x**a + 1j * y**a))


def _unit_at_zero(a, g, rng):
    zero = FractionalComplex(0.0, 0.0, a)
    return np.array([
        abs(ml(a, 0.0) - 1.0),
        abs(ml_arg(a, zero) - 1.0),
        abs(_E(a, 0.0) - 1.0),
    ])


def _period(a, g, rng):
    p = np.asarray(g["P"], float)
    return np.abs(_E(a, 1j * p**a) - 1.0)


def _plane_points(g, rng):
    n = g["points"]
    r = rng.uniform(0.2, 1.5, n)
    phi = rng.uniform(-0.45 * math.pi, 0.45 * math.pi, n)
    return r * np.exp(1j * phi)


def _sem_cplx(kind):
    def measure(a, g, rng):
        z = _plane_points(g, rng)
        z1, z2 = (m.ravel() for m in np.meshgrid(z, z, indexing="ij"))
        lhs = _E(a, z1**a) * _E(a, z2**a)
        rhs = _E(a, z1**a + z2**a) if kind == "a" else _E(a, (z1 + z2) ** a)
        return np.abs(lhs - rhs)

    return measure


def _polar(a, g, rng):
    n = g["points"]
    parts = rng.uniform(-2.0, 2.0, (n, 2))
    out = []
    for pa, pb in parts:
        z = FractionalComplex(pa, pb, a)
        r, theta, misfit = polar_decompose(z)
        out.append(r * math.sqrt(misfit))
    return np.array(out)


def _circle(a, g, rng):
    theta = np.linspace(0.0, 2 * math.pi, g["theta"])
    return np.abs(circle_param(theta, FCircleSpec(1.0, a))[2])


def _sphere(a, g, rng):
    eta, theta = np.meshgrid(np.linspace(0.0, math.pi, g["eta"]),
                             np.linspace(0.0, 2 * math.pi, g["theta"]), indexing="ij")
    return np.abs(sphere_param(eta.ravel(), theta.ravel(), FCircleSpec(1.0, a))[3])


def _basis(a, degree):
    return {"E": ml_series(a, degree), "sin": sin_series(a, degree), "cos": cos_series(a, degree)}


def _leibniz(a, g, rng):
    x = np.asarray(g["x"], float)
    basis = _basis(a, g["degree"])
    out = []
    for n1 in sorted(basis):
        for n2 in sorted(basis):
            s1, s2 = basis[n1], basis[n2]
            gap = lfd(s1.mul(s2)) - (lfd(s1).mul(s2) + s1.mul(lfd(s2)))
            out.append(np.abs(gap.eval(x)))
    return np.concatenate(out)


_QUOTIENT_PAIRS = (("x^{2a}", "E_a"), ("sin_a", "E_a"), ("cos_a", "E_a"))


def _quotient_printed(a, g, rng):
    x = np.asarray(g["x"], float)
    degree = g["degree"]
    nodes = {"x^{2a}": FracMonomial(2), "sin_a": SinA(), "cos_a": CosA(), "E_a": MLExp()}
    series = {"x^{2a}": monomial(a, 2, gamma(1.0 + 2.0 * a)), **{
        k: v for k, v in zip(("E_a", "sin_a", "cos_a"), (
            ml_series(a, degree), sin_series(a, degree), cos_series(a, degree)))}}
    out = []
    for f, h in _QUOTIENT_PAIRS:
        truth = lfd(series[f].div(series[h], degree)).eval(x)
        rule = evaluate(lfd_symbolic(Div(nodes[f], nodes[h]), a, quotient="printed"), x, a)
        out.append(np.abs(rule - truth))
    return np.concatenate(out)


def _chain(a, g, rng):
    x = np.asarray(g["x"], float)
    square = Mul(Var(), Var())
    out = []
    for name, node in (("E", MLExp()), ("sin", SinA()), ("cos", CosA())):
        outer = _basis(a, g["degree"])[name]
        truth = lfd(outer.compose_power(2)).eval(x)
        rule = evaluate(lfd_symbolic(Compose(node, square), a), x, a)
        out.append(np.abs(rule - truth))
    return np.concatenate(out)


_F = (0.0, 1.0, 0.5, -0.25)


def _series_fn(s: FracPowerSeries):
    return lambda z: s.eval(np.asarray(z, dtype=complex))


def _right_half_path(rng, segments):
    pts = 0.3 + rng.uniform(0.0, 2.0, segments + 1) + 1j * rng.uniform(-1.5, 1.5, segments + 1)
    return Contour(tuple(pts))


def _ftc(a, g, rng):
    F = FracPowerSeries(_F, a)
    paths = [Contour.segment(0.0, 1.0), Contour((0.5, 1 + 1j, 2 - 0.5j))]
    paths.append(_right_half_path(rng, g["segments"]))
    return np.array([check_ftc(F, c, a, _FIXED_PIECES) for c in paths])


def _integrands(a):
    F = FracPowerSeries(_F, a)
    return [lambda z: np.ones(np.shape(z), dtype=complex), _series_fn(lfd(F)),
            lambda z: _E(a, np.asarray(z, dtype=complex) ** a)]


def _random_polygon(rng, sides):
    center = 2.0 + 0.5j * rng.uniform(-1, 1)
    ang = np.sort(rng.uniform(0, 2 * math.pi, sides))
    rad = rng.uniform(0.4, 1.2, sides)
    return Contour.polygon(center + rad * np.exp(1j * ang))


def _closed_zero(a, g, rng):
    polys = [_random_polygon(rng, g["sides"]) for _ in range(g["contours"])]
    return np.array([abs(contour_integral(f, c, a, _FIXED_PIECES).value)
                     for c in polys for f in _integrands(a)])


def _path_indep(a, g, rng):
    out = []
    for _ in range(g["pairs"]):
        p, q = 0.5 + rng.uniform(0, 1) + 1j * rng.uniform(-1, 1), 2.5 + 1j * rng.uniform(-1, 1)
        c1 = Contour((p, 1.5 + 1.5j, q))
        c2 = Contour((p, 1.5 - 1.5j, 3.0, q))
        out.extend(path_gap(f, c1, c2, a, _FIXED_PIECES) for f in _integrands(a))
    return np.array(out)


def _deform(a, g, rng):
    center = 3.0
    outer = Contour.polygon([center + g["outer"] * v for v in (1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j)])
    inner = Contour.polygon([center + g["inner"] * v for v in (1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j)])
    return np.array([path_gap(f, outer, inner, a, _FIXED_PIECES) for f in _integrands(a)])


def _scheme_gap(a, g, rng):
    nodes = np.linspace(0.0, 1.0, g["n"] + 1)
    out = []
    for f in (np.ones_like, np.square):
        st = partition_sum(f, nodes, a, "stieltjes")
        lit = partition_sum(f, nodes, a, "literal")
        out.append(abs(st - lit))
    return np.array(out)


def _holder(a, g, rng):
    x = np.linspace(0.0, 1.0, g["points"])
    zeta = hoelder_estimate(lambda t: _E(a, t**a).real, a, x)
    return np.array([max(0.0, zeta - hoelder_bound(a, 1.0))])


_XY = {"x": [0.0, 0.25, 0.5, 0.75, 1.0], "y": [0.0, 0.25, 0.5, 0.75, 1.0]}
_X = [0.1 * k for k in range(11)]

REGISTRY = {c.claim_id: c for c in [
    Claim("sem-real", "E(lam^a x^a) E(lam^a y^a) = E(lam^a (x+y)^a)", _sem_real,
          {**_XY, "lam": [0.5, 1.0]}),
    Claim("sem-imag", "E(i^a x^a) E(i^a y^a) = E(i^a (x+y)^a)", _sem_imag, dict(_XY)),
    Claim("sem-mixed", "E(x^a) E(i^a y^a) = E(x^a + i^a y^a)", _sem_mixed, dict(_XY)),
    Claim("unit-at-zero", "E(0) = 1", _unit_at_zero, {"x": [0.0]}),
    Claim("period-2pi", "E(i^a P^a) = 1 at P = 2 pi", _period, {"P": [2 * math.pi]}),
    Claim("sem-cplx-a", "E(z1^a) E(z2^a) = E(z1^a + z2^a)", _sem_cplx("a"), {"points": 6}),
    Claim("sem-cplx-b", "E(z1^a) E(z2^a) = E((z1+z2)^a)", _sem_cplx("b"), {"points": 6}),
    Claim("polar-form", "z = |z| (cos_a t^a + i^a sin_a t^a)", _polar, {"points": 20}),
    Claim("pythagoras-circle", "cos_a^2 t^a + sin_a^2 t^a = 1 on the circle transform", _circle,
          {"theta": 201}),
    Claim("pythagoras-sphere", "u^2a + v^2a + w^2a = R^2a on the sphere transform", _sphere,
          {"eta": 21, "theta": 21}),
    Claim("leibniz", "D(f g) = D(f) g + f D(g)", _leibniz, {"x": _X, "degree": 16}),
    Claim("quotient-as-printed", "D(f/g) = (g D(f) + f D(g)) / g^2", _quotient_printed,
          {"x": _X[1:], "degree": 48}),
    Claim("chain", "D f(g(x)) = f^(a)(g(x)) (g'(x))^a", _chain, {"x": _X, "degree": 30}),
    Claim("ftc", "contour integral of D F = F(z_q) - F(z_p)", _ftc, {"segments": 50}),
    Claim("closed-zero", "closed contour integral = 0", _closed_zero, {"contours": 3, "sides": 5}),
    Claim("path-indep", "integral depends only on the end points", _path_indep, {"pairs": 2}),
    Claim("deform", "integral over C1 = integral over C2 inside C1", _deform,
          {"outer": 1.5, "inner": 0.5}),
    Claim("scheme-gap", "power of increments = increment of powers", _scheme_gap, {"n": 1024}),
    Claim("holder", "|E(x^a) - E(y^a)| <= zeta |x - y|^a", _holder, {"points": 1000}),
]}


def claim_ids() -> list:
    return sorted(REGISTRY)


def run_claim(claim_id: str, alpha, grid: dict | None = None, seed: int = 0) -> ClaimReport:
    """Measure one registered identity at order ``alpha``.

    ``grid`` overrides entries of the claim's default grid; random grids are
    drawn from a generator seeded with ``seed``. Numerical failures inside
    the measurement produce a ``DIVERGES`` report rather than an exception.
    """
    if claim_id not in REGISTRY:
        raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(claim_ids())}")
    a = as_alpha(alpha)
    claim = REGISTRY[claim_id]
    g = {**claim.defaults, **(grid or {})}
    tol = CLASSICAL_TOL if a == 1.0 else math.inf
    desc = _grid_text(g) + f"; seed={seed}"
    try:
        res = np.asarray(claim.measure(a, g, np.random.default_rng(seed)), dtype=float)
        if res.size == 0:
            raise ValueError("empty grid")
        worst = float(np.max(res))
    except (FractalCalcError, ArithmeticError) as exc:
        return ClaimReport(claim_id, claim.identity, a, f"{desc}; error: {exc}", math.nan, tol, "DIVERGES")
    if math.isnan(worst):
        status = "DIVERGES"
    else:
        status = "PASS" if worst <= tol else "FAIL"
    return ClaimReport(claim_id, claim.identity, a, desc, worst, tol, status)


def run_all(alphas, out=None, seed: int = 0) -> list:
    """Every registered claim at every α, ordered by (claim_id, α).

    ``out`` may be a path or a writable text stream; one JSON object per
    report is written to it.
    """
    reports = [run_claim(cid, a, seed=seed) for cid in claim_ids() for a in sorted(as_alpha(x) for x in alphas)]
    if out is not None:
        lines = "".join(r.to_json() + "\n" for r in reports)
        if hasattr(out, "write"):
            out.write(lines)
        else:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(lines)
    return reports
