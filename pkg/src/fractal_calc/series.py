"""Fractional power series in the Mittag-Leffler basis.

A series of order α with coefficients c_0..c_K stands for

    Σ c_k e_k(x),    e_k(x) = x^{kα} / Γ(1+kα).

In this basis the local fractional power rule is a plain left shift of the
coefficient list, so derivatives of E_α, sin_α and cos_α come out exact with
no floating point involved at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from numbers import Number

import numpy as np

from .errors import DomainError, OrderError
from .gamma import as_alpha, gamma, lgamma

__all__ = [
    "FracPowerSeries",
    "lfd",
    "lfi",
    "binomial_weight",
    "ml_series",
    "sin_series",
    "cos_series",
    "monomial",
]


@lru_cache(maxsize=4096)
def _lgamma1(x: float) -> float:
    return lgamma(1.0 + x)


def binomial_weight(j: int, k: int, alpha: float) -> float:
    """B(j, k) = Γ(1+(j+k)α) / (Γ(1+jα) Γ(1+kα)), so that e_j e_k = B(j, k) e_{j+k}."""
    if j == 0 or k == 0:
        return 1.0
    if alpha == 1.0 and j + k <= 170:
        return float(math.comb(j + k, j))
    n = (j + k) * alpha
    if n < 150.0:
        return gamma(1.0 + n) / (gamma(1.0 + j * alpha) * gamma(1.0 + k * alpha))
    return math.exp(_lgamma1(n) - _lgamma1(j * alpha) - _lgamma1(k * alpha))


@dataclass(frozen=True)
class FracPowerSeries:
    """Finite coefficient list over the Mittag-Leffler basis of order ``alpha``.

    Coefficients may be real or complex; a :class:`FractionalComplex`
    coefficient maps to complex(a, b).
    """

    coeffs: tuple
    alpha: float = 1.0

    def __post_init__(self):
        coeffs = tuple(_as_number(c) for c in self.coeffs)
        if not coeffs:
            coeffs = (0.0,)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "alpha", as_alpha(self.alpha))

    def __len__(self):
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def normalized(self) -> "FracPowerSeries":
        """Copy with trailing zero coefficients stripped (at least one kept)."""
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return FracPowerSeries(tuple(coeffs), self.alpha)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: "FracPowerSeries"):
        if not isinstance(other, FracPowerSeries):
            return NotImplemented
        if other.alpha != self.alpha:
            raise OrderError(f"series orders differ: {self.alpha!r} vs {other.alpha!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        a = self.coeffs + (0.0,) * (n - len(self))
        b = other.coeffs + (0.0,) * (n - len(other))
        return FracPowerSeries(tuple(x + y for x, y in zip(a, b)), self.alpha)

    def __sub__(self, other):
        return self + other.scale(-1.0)

    def __neg__(self):
        return self.scale(-1.0)

    def scale(self, c) -> "FracPowerSeries":
        return FracPowerSeries(tuple(c * x for x in self.coeffs), self.alpha)

    def __mul__(self, other):
        if isinstance(other, Number):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "FracPowerSeries") -> "FracPowerSeries":
        """Product truncated at degree K1 + K2 (exact for finite series)."""
        other = self._check(other)
        a = self.alpha
        out = []
        for n in range(len(self) + len(other) - 1):
            total = 0.0
            for j in range(max(0, n - other.degree), min(n, self.degree) + 1):
                cj, dk = self.coeffs[j], other.coeffs[n - j]
                if cj == 0 or dk == 0:
                    continue
                total += binomial_weight(j, n - j, a) * cj * dk
            out.append(total)
        return FracPowerSeries(tuple(out), a)

    def div(self, other: "FracPowerSeries", degree: int | None = None) -> "FracPowerSeries":
        """Quotient series q with q * other = self through ``degree`` (defaults to K1 + K2)."""
        other = self._check(other)
        d0 = other.coeffs[0]
        if d0 == 0:
            raise ZeroDivisionError("divisor series has a zero constant term")
        if degree is None:
            degree = self.degree + other.degree
        a = self.alpha
        num = self.coeffs + (0.0,) * (degree + 1 - len(self))
        q = []
        for n in range(degree + 1):
            acc = num[n]
            for j in range(n):
                k = n - j
                if k <= other.degree and other.coeffs[k] != 0:
                    acc -= binomial_weight(j, k, a) * q[j] * other.coeffs[k]
            q.append(acc / d0)
        return FracPowerSeries(tuple(q), a)

    def compose_power(self, m: int) -> "FracPowerSeries":
        """The series of x -> s(x^m) for a positive integer m.

        e_k(x^m) = Γ(1+mkα)/Γ(1+kα) e_{mk}(x), so the result is again a finite
        series, of degree m*K.
        """
        if m < 1 or int(m) != m:
            raise ValueError("m must be a positive integer")
        a = self.alpha
        out = [0.0] * (m * self.degree + 1)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            w = 1.0 if k == 0 else math.exp(_lgamma1(m * k * a) - _lgamma1(k * a))
            out[m * k] = c * w
        return FracPowerSeries(tuple(out), a)

    def eval(self, x):
        """Σ c_k x^{kα}/Γ(1+kα), summed in ascending k.

        Real arguments must be non-negative. Complex arguments (scalars or
        arrays) use the principal branch of z^α.
        """
        a = self.alpha
        scalar = np.ndim(x) == 0
        z = np.asarray(x)
        if np.iscomplexobj(z):
            z = z.astype(complex)
        else:
            z = z.astype(float)
            if np.any(z < 0):
                raise DomainError("real arguments must be non-negative")
        if scalar and not np.iscomplexobj(z) and float(z) == 0.0:
            return self.coeffs[0]
        w = z**a
        total = np.zeros(z.shape, dtype=np.result_type(z, *[np.asarray(c) for c in self.coeffs]))
        power = np.ones(z.shape, dtype=w.dtype)
        for k, c in enumerate(self.coeffs):
            if c != 0:
                total = total + c * power * _recip_gamma(k * a)
            power = power * w
        if scalar:
            return total[()].item()
        return total

    __call__ = eval

    def __str__(self):
        return "[" + ", ".join(_fmt(c) for c in self.coeffs) + f"]@{_fmt(self.alpha)}"


@lru_cache(maxsize=4096)
def _recip_gamma(x: float) -> float:
    return 1.0 / gamma(1.0 + x) if x < 169.0 else math.exp(-lgamma(1.0 + x))


def _as_number(c):
    if hasattr(c, "to_complex"):
        return c.to_complex()
    if isinstance(c, complex):
        return c
    if isinstance(c, Number):
        return float(c)
    raise TypeError(f"coefficient {c!r} is not a number")


def _fmt(v) -> str:
    if isinstance(v, complex):
        return repr(v)
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def lfd(s: FracPowerSeries) -> FracPowerSeries:
    """Local fractional derivative: the left shift c_k <- c_{k+1}."""
    if len(s) == 1:
        return FracPowerSeries((0.0,), s.alpha)
    return FracPowerSeries(s.coeffs[1:], s.alpha)


def lfi(s: FracPowerSeries) -> FracPowerSeries:
    """Local fractional antiderivative with zero constant: the right shift."""
    return FracPowerSeries((0.0,) + s.coeffs, s.alpha)


def ml_series(alpha, degree: int) -> FracPowerSeries:
    """E_α truncated at e_degree (all coefficients 1)."""
    return FracPowerSeries((1.0,) * (degree + 1), alpha)


def sin_series(alpha, degree: int) -> FracPowerSeries:
    """sin_α: coefficients 0, 1, 0, -1, ..."""
    pattern = (0.0, 1.0, 0.0, -1.0)
    return FracPowerSeries(tuple(pattern[k % 4] for k in range(degree + 1)), alpha)


def cos_series(alpha, degree: int) -> FracPowerSeries:
    """cos_α: coefficients 1, 0, -1, 0, ..."""
    pattern = (1.0, 0.0, -1.0, 0.0)
    return FracPowerSeries(tuple(pattern[k % 4] for k in range(degree + 1)), alpha)


def monomial(alpha, k: int, coeff=1.0) -> FracPowerSeries:
    """coeff * e_k."""
    return FracPowerSeries((0.0,) * k + (coeff,), alpha)
