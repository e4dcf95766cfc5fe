"""Local fractional calculus of fractal order α ∈ (0, 1].

Mittag-Leffler and fractional trigonometric functions, fractional complex
arithmetic, power series in the Mittag-Leffler basis, numerical derivatives,
integrals and transforms, and a harness that measures how far each identity
of the theory holds at a given order.
"""

from .calculus import (
    LITERAL_LIMIT,
    STIELTJES,
    Contour,
    IntegralScheme,
    check_ftc,
    contour_integral,
    lf_integral,
    lfd_numeric,
)
from .claims import ClaimReport, hoelder_estimate, run_all, run_claim
from .errors import (
    BranchCutError,
    DivergenceError,
    DomainError,
    FractalCalcError,
    NonConvergenceError,
    OrderError,
    ParseError,
    PoleError,
    UnsupportedNodeError,
)
from .expr import evaluate, lfd_symbolic, to_string
from .fcomplex import FractionalComplex, i_alpha, polar_decompose
from .gamma import FractalOrder, gamma, gamma_ratio, lgamma
from .geometry import FCircleSpec, circle_param, in_fball, in_fdisk, on_fcircle, on_fsphere, sphere_param
from .mittag_leffler import (
    SeriesControl,
    cos_alpha,
    mittag_leffler,
    ml,
    ml_arg,
    period_solve,
    sin_alpha,
)
from .parser import parse_expr, parse_fcomplex, parse_series
from .series import FracPowerSeries, cos_series, lfd, lfi, ml_series, sin_series
from .transforms import QuadSpec, lf_fourier, lf_laplace

__version__ = "0.1.0"

__all__ = sorted(n for n, v in globals().items()
                 if not n.startswith("_") and getattr(v, "__module__", "").startswith("fractal_calc"))
