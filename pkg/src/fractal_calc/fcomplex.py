"""Fractional-order complex numbers a + i^α b.

The unit i^α is a formal basis element with i^{2α} = -1, so arithmetic is
isomorphic to ordinary complex arithmetic under a + i^α b <-> a + ib. The
stored parts are the realized powers a = x^α and b = y^α, not x and y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real

import numpy as np

from .errors import DomainError, OrderError
from .gamma import FractalOrder, as_alpha

__all__ = ["FractionalComplex", "i_alpha", "from_coordinates", "real_root", "polar_decompose"]


@dataclass(frozen=True)
class FractionalComplex:
    a: float
    b: float
    alpha: float = 1.0

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError(f"parts must be finite, got ({self.a!r}, {self.b!r})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "alpha", as_alpha(self.alpha))

    @property
    def order(self) -> FractalOrder:
        return FractalOrder(self.alpha)

    @property
    def real(self) -> float:
        return self.a

    @property
    def imag(self) -> float:
        return self.b

    @classmethod
    def from_complex(cls, value: complex, alpha) -> "FractionalComplex":
        value = complex(value)
        return cls(value.real, value.imag, alpha)

    def to_complex(self) -> complex:
        return complex(self.a, self.b)

    __complex__ = to_complex

    def _coerce(self, other):
        if isinstance(other, FractionalComplex):
            if other.alpha != self.alpha:
                raise OrderError(
                    f"cannot combine orders {self.alpha!r} and {other.alpha!r}"
                )
            return other
        if isinstance(other, Real):
            return FractionalComplex(float(other), 0.0, self.alpha)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FractionalComplex(self.a + other.a, self.b + other.b, self.alpha)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FractionalComplex(self.a - other.a, self.b - other.b, self.alpha)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return FractionalComplex(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self.alpha)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = other.a * other.a + other.b * other.b
        if den == 0.0:
            raise ZeroDivisionError("division by a fractional complex zero")
        num = self * other.conj()
        return FractionalComplex(num.a / den, num.b / den, self.alpha)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return FractionalComplex(-self.a, -self.b, self.alpha)

    def __abs__(self):
        return self.modulus()

    def conj(self) -> "FractionalComplex":
        return FractionalComplex(self.a, -self.b, self.alpha)

    def modulus(self) -> float:
        """sqrt(a^2 + b^2), i.e. sqrt(x^{2α} + y^{2α})."""
        return math.hypot(self.a, self.b)

    def isclose(self, other, rel_tol=1e-9, abs_tol=0.0) -> bool:
        other = self._coerce(other)
        gap = abs(self - other)
        return gap <= max(rel_tol * max(abs(self), abs(other)), abs_tol)

    def __str__(self):
        sign = "-" if math.copysign(1.0, self.b) < 0 else "+"
        return f"{_fmt(self.a)} {sign} i^a {_fmt(abs(self.b))}"


def _fmt(v: float) -> str:
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def i_alpha(alpha) -> FractionalComplex:
    """The fractional imaginary unit i^α."""
    return FractionalComplex(0.0, 1.0, alpha)


def from_coordinates(x: float, y: float, alpha) -> FractionalComplex:
    """x^α + i^α y^α for non-negative coordinates x, y."""
    a = as_alpha(alpha)
    if x < 0 or y < 0:
        raise DomainError("coordinates must be non-negative to take alpha-powers")
    return FractionalComplex(x**a, y**a, a)


def real_root(value: float, alpha) -> float:
    """Recover x from a realized power x^α (requires x^α >= 0)."""
    a = as_alpha(alpha)
    if value < 0:
        raise DomainError("only non-negative realized powers have a real root")
    return value ** (1.0 / a)


def polar_decompose(z: FractionalComplex, theta_range=(0.0, 2.0 * math.pi), grid: int = 4096):
    """Write z as r (cos_α θ^α + i^α sin_α θ^α) as closely as possible.

    r is the fractional modulus. θ minimizes
    (cos_α θ^α - a/r)^2 + (sin_α θ^α - b/r)^2 on a uniform grid over
    ``theta_range``, refined by golden-section search around the best grid
    point. Because cos_α^2 + sin_α^2 != 1 for α < 1 the fit is generally
    inexact; the achieved minimum is returned as the residual.

    Returns ``(r, theta, residual)``.
    """
    from .mittag_leffler import cos_alpha, cos_alpha_values, sin_alpha, sin_alpha_values
    from .optimize import golden_section

    r = z.modulus()
    if r == 0.0:
        raise ZeroDivisionError("zero has no polar form")
    alpha = z.alpha
    lo, hi = float(theta_range[0]), float(theta_range[1])
    if lo < 0 or hi <= lo:
        raise ValueError("theta_range must be a non-empty interval of non-negative angles")
    ca, sa = z.a / r, z.b / r
    thetas = np.linspace(lo, hi, int(grid) + 1)
    w = thetas**alpha
    err = (cos_alpha_values(alpha, w).real - ca) ** 2 + (sin_alpha_values(alpha, w).real - sa) ** 2
    i = int(np.argmin(err))

    def objective(t):
        return (cos_alpha(alpha, t) - ca) ** 2 + (sin_alpha(alpha, t) - sa) ** 2

    theta0 = float(thetas[i])
    best = (theta0, objective(theta0))
    step = thetas[1] - thetas[0]
    t, f = golden_section(objective, max(lo, theta0 - step), min(hi, theta0 + step), tol=1e-15)
    if f < best[1]:
        best = (t, f)
    return r, best[0], best[1]
