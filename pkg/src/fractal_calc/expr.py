"""Expression trees for the local fractional rule system.

Leaves: ``Const``, ``Var`` (x), ``FracMonomial(k)`` (x^{kα}), and the three
basis functions ``MLExp`` (E_α(x^α)), ``SinA`` (sin_α x^α), ``CosA``
(cos_α x^α). Interior nodes: ``Add``, ``Mul``, ``Div`` and ``Compose(outer,
inner)``, which substitutes ``inner`` for x in ``outer``.

Trees are α-free; the order is supplied when a tree is evaluated or
differentiated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedNodeError
from .gamma import as_alpha, gamma_ratio
from .mittag_leffler import cos_alpha_values, mittag_leffler, sin_alpha_values

__all__ = [
    "ExprNode", "Const", "Var", "FracMonomial", "MLExp", "SinA", "CosA",
    "Add", "Mul", "Div", "Compose",
    "evaluate", "as_function", "lfd_symbolic", "classical_derivative", "to_string",
    "add", "mul", "neg",
]


class ExprNode:
    """Base class of all expression nodes."""

    __slots__ = ()

    def __str__(self):
        return to_string(self)


@dataclass(frozen=True)
class Const(ExprNode):
    value: float


@dataclass(frozen=True)
class Var(ExprNode):
    pass


@dataclass(frozen=True)
class FracMonomial(ExprNode):
    k: int


@dataclass(frozen=True)
class MLExp(ExprNode):
    pass


@dataclass(frozen=True)
class SinA(ExprNode):
    pass


@dataclass(frozen=True)
class CosA(ExprNode):
    pass


@dataclass(frozen=True)
class Add(ExprNode):
    left: ExprNode
    right: ExprNode


@dataclass(frozen=True)
class Mul(ExprNode):
    left: ExprNode
    right: ExprNode


@dataclass(frozen=True)
class Div(ExprNode):
    left: ExprNode
    right: ExprNode


@dataclass(frozen=True)
class Compose(ExprNode):
    outer: ExprNode
    inner: ExprNode


_FUNCTIONS = (MLExp, SinA, CosA)


# --- smart constructors ------------------------------------------------------

def add(left: ExprNode, right: ExprNode) -> ExprNode:
    if isinstance(left, Const) and left.value == 0:
        return right
    if isinstance(right, Const) and right.value == 0:
        return left
    if isinstance(left, Const) and isinstance(right, Const):
        return Const(left.value + right.value)
    return Add(left, right)


def mul(left: ExprNode, right: ExprNode) -> ExprNode:
    for a, b in ((left, right), (right, left)):
        if isinstance(a, Const):
            if a.value == 0:
                return Const(0.0)
            if a.value == 1:
                return b
    if isinstance(left, Const) and isinstance(right, Const):
        return Const(left.value * right.value)
    return Mul(left, right)


def neg(e: ExprNode) -> ExprNode:
    if isinstance(e, Const):
        return Const(-e.value)
    return mul(Const(-1.0), e)


# --- evaluation --------------------------------------------------------------

def _power(x, p):
    if np.iscomplexobj(x):
        return x**p
    if p != int(p) and np.any(x < 0):
        raise DomainError(f"x^{p} of a negative real is undefined; pass complex points")
    return np.power(x, p)


def _function(cls, x, alpha):
    w = _power(x, alpha)
    if cls is MLExp:
        out = mittag_leffler(alpha, w)
    elif cls is SinA:
        out = sin_alpha_values(alpha, w)
    else:
        out = cos_alpha_values(alpha, w)
    return out if np.iscomplexobj(x) else out.real


def _eval(node, x, alpha):
    if isinstance(node, Const):
        return np.full(np.shape(x), node.value, dtype=x.dtype)
    if isinstance(node, Var):
        return x
    if isinstance(node, FracMonomial):
        return _power(x, node.k * alpha)
    if isinstance(node, _FUNCTIONS):
        return _function(type(node), x, alpha)
    if isinstance(node, Add):
        return _eval(node.left, x, alpha) + _eval(node.right, x, alpha)
    if isinstance(node, Mul):
        return _eval(node.left, x, alpha) * _eval(node.right, x, alpha)
    if isinstance(node, Div):
        den = _eval(node.right, x, alpha)
        if np.any(den == 0):
            raise ZeroDivisionError(f"denominator {to_string(node.right)} vanishes")
        return _eval(node.left, x, alpha) / den
    if isinstance(node, Compose):
        return _eval(node.outer, _eval(node.inner, x, alpha), alpha)
    raise UnsupportedNodeError(f"cannot evaluate {node!r}")


def evaluate(node: ExprNode, x, alpha):
    """Evaluate ``node`` at real or complex points ``x`` (scalar or array)."""
    a = as_alpha(alpha)
    arr = np.asarray(x)
    arr = arr.astype(complex) if np.iscomplexobj(arr) else arr.astype(float)
    out = _eval(node, arr, a)
    if np.ndim(x) == 0:
        return out[()].item()
    return out


def as_function(node: ExprNode, alpha):
    """Vectorized callable x -> node(x) at order ``alpha``."""
    a = as_alpha(alpha)
    return lambda x: evaluate(node, x, a)


# --- differentiation -----------------------------------------------------------

def lfd_symbolic(e: ExprNode, alpha, quotient: str = "corrected") -> ExprNode:
    """Apply the local fractional rule system to ``e``.

    Sum and constant-multiple rules, the product rule g f' + f g', the
    quotient rule, the chain rule f^{(α)}(g) (g')^α, the power rule
    x^{kα} -> Γ(1+kα)/Γ(1+(k-1)α) x^{(k-1)α}, and the primitives
    E_α -> E_α, sin_α -> cos_α, cos_α -> -sin_α.

    ``quotient="corrected"`` uses (g f' - f g')/g^2; ``"printed"`` uses the
    variant with a plus sign, kept only so its failure can be measured.
    The plain variable x has no power-rule form; its derivative is the
    limit-definition value, 1 at α = 1 and 0 below.
    """
    a = as_alpha(alpha)
    if quotient not in ("corrected", "printed"):
        raise ValueError("quotient must be 'corrected' or 'printed'")

    def d(n):
        if isinstance(n, Const):
            return Const(0.0)
        if isinstance(n, Var):
            return Const(1.0 if a == 1.0 else 0.0)
        if isinstance(n, FracMonomial):
            if n.k == 0:
                return Const(0.0)
            c = gamma_ratio(1.0 + n.k * a, 1.0 + (n.k - 1) * a)
            lower = Const(1.0) if n.k == 1 else FracMonomial(n.k - 1)
            return mul(Const(c), lower)
        if isinstance(n, MLExp):
            return MLExp()
        if isinstance(n, SinA):
            return CosA()
        if isinstance(n, CosA):
            return neg(SinA())
        if isinstance(n, Add):
            return add(d(n.left), d(n.right))
        if isinstance(n, Mul):
            if isinstance(n.left, Const):
                return mul(n.left, d(n.right))
            if isinstance(n.right, Const):
                return mul(n.right, d(n.left))
            return add(mul(n.right, d(n.left)), mul(n.left, d(n.right)))
        if isinstance(n, Div):
            f, g = n.left, n.right
            second = mul(f, d(g))
            if quotient == "corrected":
                second = neg(second)
            return Div(add(mul(g, d(f)), second), Mul(g, g))
        if isinstance(n, Compose):
            outer = d(n.outer)
            if isinstance(outer, Const):
                return outer
            return mul(Compose(outer, n.inner),
                       Compose(FracMonomial(1), classical_derivative(n.inner, a)))
        raise UnsupportedNodeError(f"no local fractional rule for {n!r}")

    return d(e)


def classical_derivative(e: ExprNode, alpha) -> ExprNode:
    """Ordinary first derivative, as needed for the inner function of a chain rule.

    The basis functions E_α, sin_α, cos_α have no closed-form ordinary
    derivative in this node set unless α = 1.
    """
    a = as_alpha(alpha)

    def d(n):
        if isinstance(n, Const):
            return Const(0.0)
        if isinstance(n, Var):
            return Const(1.0)
        if isinstance(n, FracMonomial):
            if n.k == 0:
                return Const(0.0)
            if a == 1.0:
                lower = Const(1.0) if n.k == 1 else FracMonomial(n.k - 1)
                return mul(Const(float(n.k)), lower)
            return mul(Const(n.k * a), Div(FracMonomial(n.k), Var()))
        if a == 1.0 and isinstance(n, _FUNCTIONS):
            return lfd_symbolic(n, 1.0)
        if isinstance(n, _FUNCTIONS):
            raise UnsupportedNodeError(
                f"{type(n).__name__} has no ordinary derivative in closed form for alpha < 1"
            )
        if isinstance(n, Add):
            return add(d(n.left), d(n.right))
        if isinstance(n, Mul):
            return add(mul(n.right, d(n.left)), mul(n.left, d(n.right)))
        if isinstance(n, Div):
            f, g = n.left, n.right
            return Div(add(mul(g, d(f)), neg(mul(f, d(g)))), Mul(g, g))
        if isinstance(n, Compose):
            return mul(Compose(d(n.outer), n.inner), d(n.inner))
        raise UnsupportedNodeError(f"no derivative rule for {n!r}")

    return d(e)


# --- printing ------------------------------------------------------------------

_FUNC_NAMES = {MLExp: "E_a", SinA: "sin_a", CosA: "cos_a"}

# binding strength: expr 1, term 2, factor 3
def _number(v: float) -> str:
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(float(v))


def _is_negation(n) -> bool:
    return isinstance(n, Mul) and isinstance(n.left, Const) and n.left.value == -1.0


def _p(n) -> str:
    """Print ``n`` at factor level."""
    if isinstance(n, Const):
        return _number(n.value)
    if isinstance(n, Var):
        return "x"
    if isinstance(n, FracMonomial):
        return f"x^{{{n.k}a}}"
    if isinstance(n, _FUNCTIONS):
        return f"{_FUNC_NAMES[type(n)]}(x^{{1a}})"
    if isinstance(n, Compose):
        if isinstance(n.inner, Var):
            # f∘x is f itself; print it the way the parser reads it back
            return _p(n.outer)
        if isinstance(n.outer, FracMonomial):
            return f"({_expr(n.inner)})^{{{n.outer.k}a}}"
        if isinstance(n.outer, _FUNCTIONS):
            return f"{_FUNC_NAMES[type(n.outer)]}(({_expr(n.inner)})^{{1a}})"
        return "(" + _expr(_substitute(n.outer, n.inner)) + ")"
    if _is_negation(n):
        return "-" + _p(n.right)
    return "(" + _expr(n) + ")"


def _term(n) -> str:
    if isinstance(n, (Mul, Div)) and not _is_negation(n):
        op = "*" if isinstance(n, Mul) else "/"
        return f"{_term(n.left)} {op} {_p(n.right)}"
    return _p(n)


def _expr(n) -> str:
    if isinstance(n, Add):
        if _is_negation(n.right):
            return f"{_expr(n.left)} - {_term(n.right.right)}"
        return f"{_expr(n.left)} + {_term(n.right)}"
    return _term(n)


def to_string(node: ExprNode) -> str:
    """Render in the concrete syntax accepted by :func:`fractal_calc.parser.parse_expr`."""
    return _expr(node)


def _substitute(outer: ExprNode, inner: ExprNode) -> ExprNode:
    if isinstance(outer, Var):
        return inner
    if isinstance(outer, (Const,)):
        return outer
    if isinstance(outer, (FracMonomial,) + _FUNCTIONS):
        return Compose(outer, inner)
    if isinstance(outer, Compose):
        return Compose(outer.outer, _substitute(outer.inner, inner))
    return type(outer)(_substitute(outer.left, inner), _substitute(outer.right, inner))
