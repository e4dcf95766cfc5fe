"""Fractional-order circles, disks, spheres and balls.

Coordinates are taken in the first quadrant/octant (x, y, z >= 0) because
x^{2α} has no agreed meaning for negative x; callers wanting a symmetric
extension can pass absolute values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .gamma import as_alpha
from .mittag_leffler import cos_alpha_values, sin_alpha_values

__all__ = [
    "FCircleSpec",
    "on_fcircle",
    "in_fdisk",
    "on_fsphere",
    "in_fball",
    "circle_param",
    "sphere_param",
]


@dataclass(frozen=True)
class FCircleSpec:
    """Radius and order of a fractional circle x^{2α} + y^{2α} = R^{2α} (or sphere)."""

    radius: float
    alpha: float = 1.0

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        object.__setattr__(self, "radius", float(self.radius))
        object.__setattr__(self, "alpha", as_alpha(self.alpha))


def _coords(*xs):
    arrs = [np.asarray(x, dtype=float) for x in xs]
    if any(np.any(a < 0) for a in arrs):
        raise DomainError("coordinates must be non-negative")
    return arrs


def _out(v):
    return v.item() if np.ndim(v) == 0 else v


def on_fcircle(x, y, spec: FCircleSpec):
    """Signed residual x^{2α} + y^{2α} - R^{2α}; zero on the circle, negative inside."""
    x, y = _coords(x, y)
    p = 2.0 * spec.alpha
    return _out(x**p + y**p - spec.radius**p)


def in_fdisk(x, y, spec: FCircleSpec):
    """Closed fractional disk membership."""
    return _out(np.asarray(on_fcircle(x, y, spec)) <= 0)


def on_fsphere(x, y, z, spec: FCircleSpec):
    """Signed residual x^{2α} + y^{2α} + z^{2α} - R^{2α}."""
    x, y, z = _coords(x, y, z)
    p = 2.0 * spec.alpha
    return _out(x**p + y**p + z**p - spec.radius**p)


def in_fball(x, y, z, spec: FCircleSpec):
    """Closed fractional ball membership."""
    return _out(np.asarray(on_fsphere(x, y, z, spec)) <= 0)


def _trig(alpha, angle):
    w = np.asarray(angle, dtype=float)
    if np.any(w < 0):
        raise DomainError("angles must be non-negative")
    w = w**alpha
    return cos_alpha_values(alpha, w).real, sin_alpha_values(alpha, w).real


def circle_param(theta, spec: FCircleSpec):
    """(R^α cos_α θ^α, R^α sin_α θ^α) and its residual xa² + ya² - R^{2α}.

    The residual is reported, not forced to zero: cos_α² + sin_α² drifts
    from 1 when α < 1.
    """
    a = spec.alpha
    ra = spec.radius**a
    c, s = _trig(a, theta)
    xa, ya = ra * c, ra * s
    residual = xa * xa + ya * ya - ra * ra
    return _out(xa), _out(ya), _out(residual)


def sphere_param(eta, theta, spec: FCircleSpec):
    """Fractional spherical coordinates and the residual ua² + va² + wa² - R^{2α}."""
    a = spec.alpha
    ra = spec.radius**a
    ce, se = _trig(a, eta)
    ct, st = _trig(a, theta)
    ua = ra * se * ct
    va = ra * se * st
    wa = ra * ce
    residual = ua * ua + va * va + wa * wa - ra * ra
    return _out(ua), _out(va), _out(wa), _out(residual)
