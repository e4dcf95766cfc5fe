"""Limit-definition derivatives and partition-sum integrals of fractal order α.

Two readings of the integral increment are supported:

* ``stieltjes``: differences of α-powers, t_{j+1}^α - t_j^α. Sums of a
  constant telescope exactly, and α = 1 is the ordinary Riemann sum.
* ``literal``: α-powers of differences, (t_{j+1} - t_j)^α. For α < 1 and a
  non-vanishing integrand the sum grows like n^{1-α} under refinement.

All sums use left tags f(t_j) and a fixed summation order, so results are
reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import BranchCutError, DivergenceError, OrderError
from .gamma import as_alpha, gamma
from .series import FracPowerSeries, lfd

__all__ = [
    "Contour",
    "IntegralScheme",
    "STIELTJES",
    "LITERAL_LIMIT",
    "Diagnostics",
    "IntegralResult",
    "DerivativeResult",
    "lfd_numeric",
    "default_h_schedule",
    "lf_integral",
    "contour_integral",
    "partition_sum",
    "check_ftc",
    "path_gap",
    "crosses_branch_cut",
]


# --- domain types --------------------------------------------------------------

@dataclass(frozen=True)
class Contour:
    """Oriented polyline through plane points, optionally closed."""

    points: tuple
    closed: bool = False

    def __post_init__(self):
        pts = tuple(complex(p) if not isinstance(p, tuple) else complex(*p) for p in self.points)
        if len(pts) < 2:
            raise ValueError("a contour needs at least two points")
        for p, q in zip(pts, pts[1:]):
            if p == q:
                raise ValueError(f"consecutive contour points coincide at {p}")
        if self.closed and abs(pts[-1] - pts[0]) > 1e-12:
            raise ValueError("closed contour must end where it starts")
        object.__setattr__(self, "points", pts)

    @property
    def start(self) -> complex:
        return self.points[0]

    @property
    def end(self) -> complex:
        return self.points[-1]

    @classmethod
    def segment(cls, p, q) -> "Contour":
        return cls((p, q))

    @classmethod
    def polygon(cls, vertices) -> "Contour":
        """Closed contour through ``vertices`` (the first vertex is repeated at the end)."""
        vs = [complex(v) for v in vertices]
        return cls(tuple(vs) + (vs[0],), closed=True)

    def __add__(self, other: "Contour") -> "Contour":
        """Concatenate two paths; the second must start where the first ends."""
        if abs(self.end - other.start) > 1e-12:
            raise ValueError("paths do not join")
        pts = self.points + other.points[1:]
        return Contour(pts, closed=abs(pts[-1] - pts[0]) <= 1e-12)

    def nodes(self, per_segment: int) -> np.ndarray:
        """Uniform partition with ``per_segment`` pieces on every segment."""
        m = int(per_segment)
        t = np.arange(m) / m
        parts = [p + (q - p) * t for p, q in zip(self.points, self.points[1:])]
        parts.append(np.array([self.points[-1]]))
        return np.concatenate(parts)


@dataclass(frozen=True)
class IntegralScheme:
    """How the increment (Δt)^α is read and how the partition is refined.

    ``kind`` is ``"stieltjes"``, ``"literal"`` or ``"literal-limit"``.
    ``n`` fixes the partition size (pieces per segment on a contour); for
    ``stieltjes`` and ``literal-limit`` it may be left ``None`` to refine by
    doubling until two levels agree to ``rtol`` or ``n_max`` is reached.
    """

    kind: str = "stieltjes"
    n: int | None = None
    n_max: int = 2**20
    rtol: float = 1e-8

    def __post_init__(self):
        if self.kind not in ("stieltjes", "literal", "literal-limit"):
            raise ValueError(f"unknown scheme {self.kind!r}")
        if self.kind == "literal" and self.n is None:
            raise ValueError("the literal scheme needs a fixed n")
        if self.n is not None and int(self.n) < 1:
            raise ValueError("n must be at least 1")

    @classmethod
    def stieltjes(cls, n: int | None = None) -> "IntegralScheme":
        return cls("stieltjes", n)

    @classmethod
    def literal(cls, n: int) -> "IntegralScheme":
        return cls("literal", n)

    @classmethod
    def literal_limit(cls) -> "IntegralScheme":
        return cls("literal-limit")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "IntegralScheme":
        """Parse ``stieltjes``, ``literal:<n>`` or ``literal-limit``."""
        text = text.strip().lower()
        if text == "stieltjes":
            return cls("stieltjes", n)
        if text == "literal-limit":
            return cls("literal-limit")
        if text.startswith("literal:"):
            return cls("literal", int(text.split(":", 1)[1]))
        if text == "literal" and n is not None:
            return cls("literal", n)
        raise ValueError(f"unknown scheme {text!r}; use stieltjes, literal:<n> or literal-limit")

    def __str__(self):
        return f"literal:{self.n}" if self.kind == "literal" else self.kind


STIELTJES = IntegralScheme()
LITERAL_LIMIT = IntegralScheme("literal-limit")


@dataclass
class Diagnostics:
    """Record of a refinement sequence."""

    scheme: str
    n: list = field(default_factory=list)
    values: list = field(default_factory=list)
    converged: bool = False
    error_estimate: float = math.nan
    exponent: float | None = None

    def to_dict(self) -> dict:
        def plain(v):
            v = complex(v)
            return v.real if v.imag == 0 else [v.real, v.imag]

        return {
            "scheme": self.scheme,
            "n": list(self.n),
            "values": [plain(v) for v in self.values],
            "converged": self.converged,
            "error_estimate": None if math.isnan(self.error_estimate) else self.error_estimate,
            "exponent": self.exponent,
        }


class IntegralResult(NamedTuple):
    value: complex
    diagnostics: Diagnostics


class DerivativeResult(NamedTuple):
    estimate: float
    converged: bool
    trace: list


# --- derivative ------------------------------------------------------------------

def default_h_schedule():
    return [2.0**-m for m in range(4, 41)]


def lfd_numeric(f, x0: float, alpha, h_schedule=None, rtol: float = 1e-6,
                window: int = 3) -> DerivativeResult:
    """Right-sided difference quotients Γ(1+α)(f(x0+h) - f(x0))/h^α.

    Walks the decreasing ``h_schedule`` (default 2^-m, m = 4..40) and stops at
    the first ``window`` consecutive quotients agreeing within ``rtol``
    relative. Stopping early keeps cancellation in f(x0+h) - f(x0) out of
    the estimate. Returns ``(estimate, converged, trace)``.
    """
    a = as_alpha(alpha)
    if x0 < 0:
        raise ValueError("x0 must be non-negative")
    hs = default_h_schedule() if h_schedule is None else [float(h) for h in h_schedule]
    if not hs or any(h <= 0 for h in hs):
        raise ValueError("h_schedule must hold positive step sizes")
    g = gamma(1.0 + a)
    f0 = f(x0)
    trace = []
    for h in hs:
        trace.append(float(g * (f(x0 + h) - f0) / h**a))
        if len(trace) >= window:
            last = trace[-window:]
            spread = max(last) - min(last)
            if spread <= rtol * max(abs(v) for v in last):
                return DerivativeResult(trace[-1], True, trace)
    return DerivativeResult(trace[-1], False, trace)


# --- partition sums --------------------------------------------------------------

def _apply(f, nodes: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(f(nodes))
        if vals.shape == nodes.shape:
            return vals
        if vals.ndim == 0:
            return np.full(nodes.shape, vals[()])
    except (TypeError, ValueError):
        pass
    return np.array([f(t) for t in nodes.tolist()])


def _increments(nodes: np.ndarray, alpha: float, kind: str, powered=None) -> np.ndarray:
    if kind == "stieltjes" or alpha == 1.0:
        p = powered if powered is not None else _principal_power(nodes, alpha)
        return np.diff(p)
    d = np.diff(nodes)
    if np.iscomplexobj(d):
        return d**alpha
    return np.power(d, alpha)


def _principal_power(z: np.ndarray, alpha: float) -> np.ndarray:
    if alpha == 1.0:
        return z
    if np.iscomplexobj(z):
        return z**alpha
    if np.any(z < 0):
        return np.asarray(z, dtype=complex) ** alpha
    return np.power(z, alpha)


def partition_sum(f, nodes, alpha, kind: str = "stieltjes") -> complex:
    """Σ f(t_j)·incr_j / Γ(1+α) over explicit partition ``nodes``, no refinement."""
    a = as_alpha(alpha)
    nodes = np.asarray(nodes)
    vals = _apply(f, nodes)
    return _sum(vals[:-1], _increments(nodes, a, kind), a)


def _sum(vals, incr, alpha):
    total = np.sum(vals * incr) / gamma(1.0 + alpha)
    return total.item() if hasattr(total, "item") else total


def _error_powers(alpha: float, count: int) -> list:
    """Exponents of h in the error of a left Stieltjes sum: 1, 1+α, 2, 2+α, ...

    The α-shifted terms come from the t^(α-1) density of the measure at the
    origin; at α = 1 they merge with the integer powers.
    """
    powers = sorted({float(k) for k in range(1, count + 1)}
                    | {k + alpha for k in range(1, count + 1)})
    return powers[:count]


def _romberg(sums: list, alpha: float = 1.0) -> list:
    """Diagonal of the Richardson table over successive doublings, coarse to fine."""
    powers = _error_powers(alpha, max(len(sums) - 1, 1))
    table = [[s] for s in sums]
    for i in range(1, len(sums)):
        for j in range(1, i + 1):
            prev = table[i][j - 1]
            table[i].append(prev + (prev - table[i - 1][j - 1]) / (2 ** powers[j - 1] - 1))
    return [row[-1] for row in table]


def _levels(n: int, depth: int = 4) -> int:
    k = 0
    while k < depth and n % 2 ** (k + 1) == 0:
        k += 1
    return k


def _fixed(f, make_nodes, n, alpha, kind, label, rtol):
    """Sums on one finest partition; stieltjes extrapolates over its dyadic coarsenings.

    A literal sum is returned as requested (no error estimate); a stieltjes
    result counts as converged when its last two extrapolations agree to ``rtol``.
    """
    nodes = make_nodes(n)
    vals = _apply(f, nodes)
    powered = _principal_power(nodes, alpha)
    g = gamma(1.0 + alpha)
    if kind == "literal":
        raw = np.sum(vals[:-1] * _increments(nodes, alpha, kind)) / g
        diag = Diagnostics(label, [n], [raw.item()], True)
        return IntegralResult(raw.item(), diag)
    depth = _levels(n)
    sums, ns = [], []
    for level in range(depth, -1, -1):
        s = 2**level
        sums.append((np.sum(vals[:-1:s] * np.diff(powered[::s])) / g).item())
        ns.append(n // s)
    diag_vals = _romberg(sums, alpha)
    err = abs(diag_vals[-1] - diag_vals[-2]) if len(diag_vals) > 1 else math.nan
    scale = (np.sum(np.abs(vals[:-1] * np.diff(powered))) / g).item()
    converged = bool(err <= rtol * abs(diag_vals[-1]) + 1e-15 * scale)
    diag = Diagnostics(label, ns, sums, converged, err)
    return IntegralResult(diag_vals[-1], diag)


def _refine(f, make_nodes, scheme: IntegralScheme, alpha, label, n0: int = 16):
    """Doubling refinement; literal-limit also watches for n^(1-α) growth."""
    g = gamma(1.0 + alpha)
    diag = Diagnostics(label)
    sums = []
    n = n0
    while n <= scheme.n_max:
        nodes = make_nodes(n)
        vals = _apply(f, nodes)
        incr = _increments(nodes, alpha, scheme.kind)
        s = (np.sum(vals[:-1] * incr) / g).item()
        scale = (np.sum(np.abs(vals[:-1] * incr)) / g).item()
        sums.append(s)
        diag.n.append(n)
        diag.values.append(s)
        if scheme.kind == "literal-limit" and alpha < 1.0 and len(sums) >= 4:
            mags = np.abs(np.array(sums[-4:]))
            if np.all(mags > 0):
                slope = float(np.polyfit(np.log(diag.n[-4:]), np.log(mags), 1)[0])
                diag.exponent = slope
                if abs(slope - (1.0 - alpha)) <= 0.05:
                    raise DivergenceError(
                        f"partition sums grow like n^{slope:.3f} (1 - alpha = {1 - alpha:g})", diag
                    )
        extrap = _romberg(sums[-5:], alpha)
        if len(extrap) >= 2:
            err = abs(extrap[-1] - extrap[-2])
            diag.error_estimate = err
            if err <= scheme.rtol * abs(extrap[-1]) + 1e-15 * scale:
                diag.converged = True
                return IntegralResult(extrap[-1], diag)
        n *= 2
    if scheme.kind == "literal-limit" and alpha < 1.0:
        raise DivergenceError("partition sums did not stabilize", diag)
    return IntegralResult(_romberg(sums[-5:], alpha)[-1], diag)


def _dispatch(f, make_nodes, scheme, alpha, label):
    if scheme.kind == "literal" or scheme.n is not None:
        return _fixed(f, make_nodes, int(scheme.n), alpha, scheme.kind, label, scheme.rtol)
    return _refine(f, make_nodes, scheme, alpha, label)


# --- integrals -------------------------------------------------------------------

def lf_integral(f, a: float, b: float, alpha, scheme: IntegralScheme = STIELTJES) -> IntegralResult:
    """Local fractional integral of ``f`` over [a, b] as a partition sum.

    ``stieltjes`` with a fixed ``n`` returns the Richardson-extrapolated value
    of the n, n/2, ..., n/16 sums (as far as n halves evenly; raw sums in
    the diagnostics); without ``n`` it doubles from 16 until two
    extrapolations agree to ``rtol``. ``literal`` returns the raw sum at its n. ``literal-limit`` doubles and
    raises :class:`DivergenceError` once the sums grow like n^(1-α).
    """
    al = as_alpha(alpha)
    a, b = float(a), float(b)
    if a < 0 or b < a:
        raise ValueError("need 0 <= a <= b")
    if a == b:
        return IntegralResult(0.0, Diagnostics(str(scheme), [0], [0.0], True, 0.0))
    res = _dispatch(f, lambda n: np.linspace(a, b, n + 1), scheme, al, str(scheme))
    value = res.value
    if isinstance(value, complex) and value.imag == 0:
        value = value.real
    return IntegralResult(value, res.diagnostics)


def crosses_branch_cut(contour: Contour) -> bool:
    """True when the polyline meets the negative real axis (the origin itself is allowed)."""
    for p, q in zip(contour.points, contour.points[1:]):
        if p.imag == 0 and q.imag == 0:
            if min(p.real, q.real) < 0:
                return True
            continue
        if (p.imag > 0 and q.imag > 0) or (p.imag < 0 and q.imag < 0):
            continue
        t = p.imag / (p.imag - q.imag)
        x = p.real + t * (q.real - p.real)
        if x < 0:
            return True
    return False


def contour_integral(f, c: Contour, alpha, scheme: IntegralScheme = STIELTJES) -> IntegralResult:
    """Σ f(z_j)·incr_j / Γ(1+α) along polyline ``c``, increments per ``scheme``.

    Under ``stieltjes`` with α < 1 the increments use the principal branch of
    z^α, so a path meeting the negative real axis raises
    :class:`BranchCutError`. ``n`` counts pieces per segment.
    """
    al = as_alpha(alpha)
    if scheme.kind == "stieltjes" and al < 1.0 and crosses_branch_cut(c):
        raise BranchCutError("path meets the branch cut of z^alpha (the negative real axis)")
    res = _dispatch(f, c.nodes, scheme, al, str(scheme))
    return IntegralResult(complex(res.value), res.diagnostics)


def check_ftc(F: FracPowerSeries, c: Contour, alpha, scheme: IntegralScheme = STIELTJES) -> float:
    """|∫_C lfd(F) - (F(z_q) - F(z_p))| with lfd(F) realized as a function."""
    al = as_alpha(alpha)
    if F.alpha != al:
        raise OrderError(f"series order {F.alpha!r} differs from alpha {al!r}")
    dF = lfd(F)
    value = contour_integral(lambda z: dF.eval(np.asarray(z, dtype=complex)), c, al, scheme).value
    primitive = complex(F.eval(complex(c.end))) - complex(F.eval(complex(c.start)))
    return abs(value - primitive)


def path_gap(f, c1: Contour, c2: Contour, alpha, scheme: IntegralScheme = STIELTJES) -> float:
    """|∫_{C1} f - ∫_{C2} f|: the path-independence and deformation residual."""
    i1 = contour_integral(f, c1, alpha, scheme).value
    i2 = contour_integral(f, c2, alpha, scheme).value
    return abs(i1 - i2)
