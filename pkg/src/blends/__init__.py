"""Blends: two-point Hermite interpolants built from Taylor data at both ends."""

from .analysis import (
    UNIT_ROUNDOFF,
    ErrorModelParams,
    OverflowRiskWarning,
    backward_error_envelope,
    binomial_growth,
    check_overflow,
    eval_exact,
    gamma_bound,
    lebesgue,
)
from .blendstring import BlendString, string_antiderivative, string_eval, string_integrate
from .calculus import (
    QuadratureRule,
    antiderivative,
    antiderivative_z,
    integrate,
    integrate_exact,
    integration_error_bound,
    quadrature_weights,
    truncation_error_bound,
)
from .core import Blend, Jet, from_derivatives, new_blend, reflect
from .evaluation import eval_blend, eval_derivatives, eval_grid, hsf, taylor_at
from .generators import gen_cospi, gen_exp_recip, gen_poly, gen_step

__version__ = "0.1.0"
