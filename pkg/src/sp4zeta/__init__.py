"""High-precision evaluation and zero analysis for the Sp(4) zeta function over Q."""

from .precision import PrecisionContext, create_context, default_context, format_value, parse_value
from .special import chi, gamma, xi, zeta
from .closed_forms import FunctionId, big_z, evaluate, xi_sp4

__all__ = [
    "FunctionId", "PrecisionContext", "big_z", "chi", "create_context", "default_context",
    "evaluate", "format_value", "gamma", "parse_value", "xi", "xi_sp4", "zeta",
]
