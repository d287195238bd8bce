"""Windowed, local and global quantifiers with closed-form references."""

from latticeq.quantifier.closed_forms import (
    DiscreteDelta,
    discrete_delta_sum,
    gauss_closed_form_continuum,
    gauss_closed_form_discrete,
)
from latticeq.quantifier.quantifiers import (
    check_window,
    cycle_order,
    full_cycle_sum,
    global_half_range,
    global_quantify,
    inner_product,
    lattice_range,
    lattice_span,
    local_quantify,
    norm,
    summation_period,
    universe_quantify,
    window_quantify,
)
from latticeq.quantifier.results import QuantifierResult, Window
from latticeq.quantifier.summation import (
    deterministic_sum,
    thread_count,
    use_terms_ceiling,
    use_threads,
)

__all__ = [
    "DiscreteDelta",
    "QuantifierResult",
    "Window",
    "check_window",
    "cycle_order",
    "deterministic_sum",
    "discrete_delta_sum",
    "full_cycle_sum",
    "gauss_closed_form_continuum",
    "gauss_closed_form_discrete",
    "global_half_range",
    "global_quantify",
    "inner_product",
    "lattice_range",
    "lattice_span",
    "local_quantify",
    "norm",
    "summation_period",
    "thread_count",
    "universe_quantify",
    "use_terms_ceiling",
    "use_threads",
    "window_quantify",
]
