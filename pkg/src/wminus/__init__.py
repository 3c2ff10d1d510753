"""Exact computations in the -sigma fixed part of the centrally extended
algebra of differential operators on the circle, its enveloping algebra,
the level-one Fock module, and a generator-level map from a diagrammatic
trace algebra."""

from .coeff import Scalar, parse_scalar, render_scalar
from .wlie import LieElement, bracket, central, is_in_wminus, parse_lie, render_lie, sigma_apply, w
from .wenv import EnvElement, multiply, parse_env, pbw_normal_form, quotient_reduce, render_env
from .fock import FockVector, act_env, act_lie, parse_fock, render_fock
from .heis import HeisElement, embed_heis, heis_bracket, parse_heis
from .dims import multiset_generator_count, odd_partition_count, series_coefficients
from .trace import calibrate_phi, check_relation, ledger_expand, parse_trace, phi_image

__version__ = "0.1.0"

__all__ = [
    "Scalar", "parse_scalar", "render_scalar",
    "LieElement", "bracket", "central", "is_in_wminus", "parse_lie", "render_lie", "sigma_apply", "w",
    "EnvElement", "multiply", "parse_env", "pbw_normal_form", "quotient_reduce", "render_env",
    "FockVector", "act_env", "act_lie", "parse_fock", "render_fock",
    "HeisElement", "embed_heis", "heis_bracket", "parse_heis",
    "multiset_generator_count", "odd_partition_count", "series_coefficients",
    "calibrate_phi", "check_relation", "ledger_expand", "parse_trace", "phi_image",
]
