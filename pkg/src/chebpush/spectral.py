"""Chebyshev series expansion of densities.

Coefficients are the weighted projections

    mu_l = c_l / pi * integral of f(x) T_l(x) / sqrt(1 - x^2),  c_0 = 1, c_l = 2,

computed by Gauss-Chebyshev quadrature on the roots grid x_j = cos(theta_j),
theta_j = pi (j + 1/2) / N. The nodes absorb the weight exactly, so the
endpoint singularity of the weight never appears numerically, and the rule
is exact for integrands of polynomial degree < 2N - l.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .chebpoly import cheb_integral

# A truncated series is considered decayed when its last coefficient is
# below this. Smooth catalog densities sit below 1e-16 at order 64; a jump
# density sits near 1e-2, so anything between separates the two cleanly.
DECAY_TOL = 1e-10


@dataclass(frozen=True)
class ChebSeries:
    """Truncated Chebyshev expansion f ~ sum_l coeffs[l] T_l.

    decayed is False when the tail had not dropped below DECAY_TOL at the
    truncation order, i.e. the series is usable but not spectrally accurate.
    """

    coeffs: np.ndarray
    source: str = ""
    decayed: bool = True

    @property
    def order(self):
        return len(self.coeffs) - 1


def expand_density(d, order=64, quad_points=None):
    """Expand a bounded density to the given order.

    Densities flagged non-expandable (unbounded pdf) raise ValueError: their
    coefficients are not defined by this quadrature. A series whose last
    coefficient has not decayed below DECAY_TOL triggers a RuntimeWarning
    and is returned with decayed=False.
    """
    if not d.expandable:
        raise ValueError(f"{d.name} has no convergent Chebyshev expansion (unbounded pdf)")
    order = int(order)
    if order < 1:
        raise ValueError(f"series order must be >= 1, got {order}")
    n = int(quad_points) if quad_points is not None else max(256, 4 * (order + 1))
    if n <= order:
        raise ValueError("quadrature must use more points than the series order")
    theta = np.pi * (np.arange(n) + 0.5) / n
    fx = np.asarray(d.pdf(np.cos(theta)), dtype=float)
    ls = np.arange(order + 1)
    mu = (np.cos(np.outer(ls, theta)) @ fx) / n
    mu[1:] *= 2.0
    # judge decay on a short tail window, not the last coefficient alone:
    # symmetric or half-supported densities zero out every other coefficient
    tail = float(np.max(np.abs(mu[max(1, order - 3):])))
    decayed = tail < DECAY_TOL
    if not decayed:
        warnings.warn(
            f"Chebyshev series for {d.name} has not decayed by order {order}: "
            f"tail max |mu_l| = {tail:.2e}",
            RuntimeWarning, stacklevel=2)
    mu.flags.writeable = False
    return ChebSeries(coeffs=mu, source=d.name, decayed=decayed)


def series_eval(series, x):
    """Evaluate the truncated series at x (Clenshaw recurrence)."""
    out = np.polynomial.chebyshev.chebval(np.asarray(x, dtype=float), series.coeffs)
    return float(out) if np.ndim(x) == 0 else out


def normalization_residual(series):
    """|1 - sum_l mu_l * integral(T_l)|.

    For a probability density the weighted coefficient sum must reproduce
    total mass 1; the residual measures quadrature plus truncation error.
    """
    weights = np.array([cheb_integral(l) for l in range(len(series.coeffs))])
    return float(abs(1.0 - np.dot(series.coeffs, weights)))


def even_moment_sum(series):
    """Sum of the even-index coefficients.

    For a series that converges at the endpoints this equals
    (f(1) + f(-1)) / 2, and it is the constant that drives the second-order
    convergence term of the pushforward.
    """
    return float(np.sum(series.coeffs[::2]))
