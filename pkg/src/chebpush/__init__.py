"""Exact and asymptotic distributions of Chebyshev-polynomial pushforwards.

For a random variable X on [-1, 1] and the Chebyshev polynomial T_k, this
package computes the distribution of T_k(X) exactly (density and cdf), by a
closed-form series route, and by a second-order asymptotic expansion, and
provides the sampling and diagnostic tooling to verify that everything
converges to the arcsine law at the predicted rate.
"""

from .chebpoly import (
    IntervalMap,
    cheb_eval,
    cheb_eval_recurrence,
    cheb_integral,
    cosine_sum,
    critical_points,
    sine_sum,
)
from .densities import (
    Density,
    catalog,
    make_density,
    numeric_cdf_check,
    parse_density,
    sample,
)
from .montecarlo import (
    KSResult,
    SampleBatch,
    histogram,
    ks_statistic,
    push_samples,
    uniform_stream,
)
from .pushforward import (
    LIMIT_BOUNDED_FACTOR,
    ConvergenceReport,
    PushforwardResult,
    angle_density,
    asymptotic_bounded_factor,
    bounded_factor,
    convergence_report,
    default_grid,
    mass_left_of_zero,
    pushforward_cdf,
    pushforward_mass,
    pushforward_on_grid,
    pushforward_pdf,
    scaled_angle_density,
    series_bounded_factor,
    sup_error,
)
from .spectral import (
    ChebSeries,
    even_moment_sum,
    expand_density,
    normalization_residual,
    series_eval,
)

__version__ = "0.1.0"

__all__ = [
    "ChebSeries",
    "ConvergenceReport",
    "Density",
    "IntervalMap",
    "KSResult",
    "LIMIT_BOUNDED_FACTOR",
    "PushforwardResult",
    "SampleBatch",
    "angle_density",
    "asymptotic_bounded_factor",
    "bounded_factor",
    "catalog",
    "cheb_eval",
    "cheb_eval_recurrence",
    "cheb_integral",
    "convergence_report",
    "cosine_sum",
    "critical_points",
    "default_grid",
    "even_moment_sum",
    "expand_density",
    "histogram",
    "ks_statistic",
    "make_density",
    "mass_left_of_zero",
    "normalization_residual",
    "numeric_cdf_check",
    "parse_density",
    "push_samples",
    "pushforward_cdf",
    "pushforward_mass",
    "pushforward_on_grid",
    "pushforward_pdf",
    "sample",
    "scaled_angle_density",
    "series_bounded_factor",
    "series_eval",
    "sine_sum",
    "sup_error",
    "uniform_stream",
]
