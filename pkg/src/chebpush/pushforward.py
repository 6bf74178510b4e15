"""Distribution of T_k(X) for a random variable X on [-1, 1].

Write Theta = arccos(X) in [0, pi] and Psi = k Theta, so that
T_k(X) = cos(Psi). Folding Psi back through the cosine gives, for
z in (-1, 1), the exact pushforward density

    f_k(z) = S_k(z) / sqrt(1 - z^2),

where S_k(z) collects the Theta density over the k preimage angles of z:

    S_k(z) = (1/k) * sum_{j=1..floor(k/2)} [ f_Theta((2 pi j - beta) / k)
                                           + f_Theta((2 pi (j-1) + beta) / k) ]
             (+ (1/k) f_Theta((2 pi floor(k/2) + beta) / k) for odd k),

with beta = arccos(z). S_k is the bounded object; the 1/sqrt(1 - z^2)
factor carries the integrable endpoint singularities. For continuous input
densities S_k converges pointwise to 1/pi at rate 1/k^2, i.e. the
distribution of T_k(X) converges to the arcsine law; the arcsine law itself
has S_k identically 1/pi for every k, which is its invariance.

Three routes to S_k live here and deliberately stay independent so they can
cross-check each other: the direct angle sum above, a closed-form reassembly
through the Chebyshev series of the input density, and a second-order
asymptotic expansion in 1/k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .spectral import even_moment_sum

_TWO_PI = 2.0 * np.pi

# Bounded factor of the arcsine law: the pointwise limit of S_k.
LIMIT_BOUNDED_FACTOR = 1.0 / np.pi

# Default evaluation grid: z = cos(beta) with beta uniform on
# [GRID_EPS, pi - GRID_EPS]. The endpoints are excluded because f_k is
# singular there; S_k is what gets measured.
GRID_EPS = 1e-3

# Below this sup deviation from 1/pi a density is reported as invariant
# rather than converging (rounding floor of the angle sum).
INVARIANT_TOL = 1e-13

_ANGLE_SLACK = 1e-9


def _check_k(k):
    if int(k) != k or k < 1:
        raise ValueError(f"Chebyshev index must be a positive integer, got {k!r}")
    return int(k)


def _open_interval(z):
    arr = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("evaluation point must be finite")
    if np.any(np.abs(arr) >= 1.0):
        raise ValueError("pushforward density is evaluated on the open interval "
                         "(-1, 1); it is singular at the endpoints")
    return arr


def default_grid(n=201, eps=GRID_EPS):
    """Ascending z grid cos(beta), beta uniform on [eps, pi - eps]."""
    if int(n) != n or n < 2:
        raise ValueError(f"grid needs at least 2 points, got {n!r}")
    if not 0.0 < eps < np.pi / 2:
        raise ValueError(f"grid margin must lie in (0, pi/2), got {eps!r}")
    beta = np.linspace(eps, np.pi - eps, int(n))
    return np.cos(beta)[::-1].copy()


def _angle_pdf(d, theta):
    # internal fast path; theta is in [0, pi] by construction of the callers
    if d.angle_pdf is not None:
        return np.asarray(d.angle_pdf(theta), dtype=float)
    return np.asarray(d.pdf(np.cos(theta)), dtype=float) * np.sin(theta)


def _angle_cdf(d, theta):
    if d.angle_cdf is not None:
        return np.asarray(d.angle_cdf(theta), dtype=float)
    return 1.0 - np.asarray(d.cdf(np.cos(theta)), dtype=float)


def angle_density(d, theta):
    """Density of Theta = arccos(X) on [0, pi]: pdf(cos theta) * sin theta.

    Uses the density's exact angle-space form when it has one.
    """
    arr = np.asarray(theta, dtype=float)
    if np.any(arr < -_ANGLE_SLACK) or np.any(arr > np.pi + _ANGLE_SLACK):
        raise ValueError("angle outside [0, pi]")
    out = _angle_pdf(d, np.clip(arr, 0.0, np.pi))
    return float(out) if np.ndim(theta) == 0 else out


def scaled_angle_density(d, k, psi):
    """Density of Psi = k * arccos(X) on [0, k pi].

    Uniform exactly when X follows the arcsine law; that flatness is what
    every T_k folds back into invariance.
    """
    k = _check_k(k)
    arr = np.asarray(psi, dtype=float)
    if np.any(arr < -_ANGLE_SLACK) or np.any(arr > k * np.pi + _ANGLE_SLACK):
        raise ValueError(f"scaled angle outside [0, {k} pi]")
    out = _angle_pdf(d, np.clip(arr / k, 0.0, np.pi)) / k
    return float(out) if np.ndim(psi) == 0 else out


def _bounded_from_beta(d, k, beta):
    # fixed summation order over j; keeps results bit-identical however the
    # evaluation is chunked over z
    m = k // 2
    acc = np.zeros_like(beta)
    for j in range(1, m + 1):
        acc += _angle_pdf(d, (_TWO_PI * j - beta) / k)
        acc += _angle_pdf(d, (_TWO_PI * (j - 1) + beta) / k)
    if k % 2 == 1:
        acc += _angle_pdf(d, (_TWO_PI * m + beta) / k)
    return acc / k


def bounded_factor(d, k, z):
    """S_k(z): the pushforward density with the arcsine singularity factored out."""
    k = _check_k(k)
    arr = _open_interval(z)
    out = _bounded_from_beta(d, k, np.arccos(arr))
    return float(out) if np.ndim(z) == 0 else out


def pushforward_pdf(d, k, z):
    """Exact density of T_k(X) at z in (-1, 1)."""
    k = _check_k(k)
    arr = _open_interval(z)
    out = _bounded_from_beta(d, k, np.arccos(arr)) / np.sqrt((1.0 - arr) * (1.0 + arr))
    return float(out) if np.ndim(z) == 0 else out


def pushforward_cdf(d, k, z):
    """Exact distribution function of T_k(X) on [-1, 1].

    Accumulates the Psi tail probabilities branch by branch; tiny negative
    round-off and overshoot past 1 are clipped.
    """
    k = _check_k(k)
    arr = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("evaluation point must be finite")
    if np.any(np.abs(arr) > 1.0 + 1e-12):
        raise ValueError("cdf argument outside [-1, 1]")
    beta = np.arccos(np.clip(arr, -1.0, 1.0))
    m = k // 2
    acc = np.zeros_like(beta)
    for j in range(1, m + 1):
        acc += _angle_cdf(d, (_TWO_PI * j - beta) / k)
        acc -= _angle_cdf(d, (_TWO_PI * (j - 1) + beta) / k)
    if k % 2 == 1:
        acc += 1.0 - _angle_cdf(d, (_TWO_PI * m + beta) / k)
    out = np.clip(acc, 0.0, 1.0)
    return float(out) if np.ndim(z) == 0 else out


def _mode_contribution_direct(k, l, beta):
    # bounded factor of the pure mode T_l, summed directly; the fallback for
    # resonant l where the closed form is 0/0
    m = k // 2
    acc = np.zeros_like(beta)
    for j in range(1, m + 1):
        a = (_TWO_PI * j - beta) / k
        b = (_TWO_PI * (j - 1) + beta) / k
        acc += np.sin(a) * np.cos(l * a) + np.sin(b) * np.cos(l * b)
    return acc / k


def series_bounded_factor(series, k, z):
    """S_k(z) reassembled from the Chebyshev coefficients of the input density.

    Even k only; each mode l contributes mu_l * C_l(k, z) with

        C_0 = 2 cos((pi - beta) / k) / (k sin(pi / k)),   C_1 = 0,

    and for l >= 2 a closed four-sine bracket with prefactor
    cos(l pi / 2)^2 / (2 k sin(pi (l+1) / k) sin(pi (1-l) / k)). When l + 1
    or l - 1 is a multiple of k that prefactor degenerates to 0/0, and the
    mode is summed directly instead; the limit is finite.
    """
    k = _check_k(k)
    if k % 2 == 1:
        raise ValueError("series reassembly covers even k; use bounded_factor for odd k")
    arr = _open_interval(z)
    beta = np.arccos(arr)
    mu = series.coeffs
    total = mu[0] * 2.0 * np.cos((np.pi - beta) / k) / (k * np.sin(np.pi / k))
    for l in range(2, len(mu)):
        if (l - 1) % k == 0 or (l + 1) % k == 0:
            c_l = _mode_contribution_direct(k, l, beta)
        else:
            pref = np.cos(0.5 * np.pi * l) ** 2 / (
                2.0 * k * np.sin(np.pi * (l + 1) / k) * np.sin(np.pi * (1 - l) / k))
            bracket = (np.sin((_TWO_PI + (l - 1) * beta) / k)
                       + np.sin((_TWO_PI * l + (1 - l) * beta) / k)
                       + np.sin((_TWO_PI - (l + 1) * beta) / k)
                       + np.sin((-_TWO_PI * l + (l + 1) * beta) / k))
            c_l = pref * bracket
        total = total + mu[l] * c_l
    return float(total) if np.ndim(z) == 0 else total


def asymptotic_bounded_factor(series, k, z):
    """Second-order expansion of S_k in 1/k.

    S_k(z) ~ 1/pi + (1/k^2) (pi/3 - (pi - beta)^2 / pi) * sum_l mu_{2l},
    beta = arccos(z). The remainder is O(1/k^4) for densities whose series
    decays; only the even coefficient sum of the input enters at this order.
    """
    k = _check_k(k)
    if k < 2:
        raise ValueError("the expansion needs k >= 2; k = 1 is the identity map")
    arr = _open_interval(z)
    beta = np.arccos(arr)
    gap = np.pi - beta
    out = (LIMIT_BOUNDED_FACTOR
           + (np.pi / 3.0 - gap * gap / np.pi) * even_moment_sum(series) / (k * k))
    return float(out) if np.ndim(z) == 0 else out


def sup_error(d, k, grid=201):
    """Sup over the standard grid of |S_k(z) - 1/pi|."""
    k = _check_k(k)
    z = default_grid(grid)
    return float(np.max(np.abs(bounded_factor(d, k, z) - LIMIT_BOUNDED_FACTOR)))


@dataclass(frozen=True)
class ConvergenceReport:
    """Sup-error trace over a ladder of k values plus a log-log fit.

    label is "invariant" when every error sits at the rounding floor
    (fitted_order is then nan), "empirical" for discontinuous inputs where
    the error decay is observed rather than covered by the smooth-case
    analysis, and "fit" otherwise. fitted_order is nan with fewer than
    three k values.
    """

    density: str
    ks: tuple
    sup_errors: tuple
    fitted_order: float
    label: str


def convergence_report(d, ks, grid=201):
    ks = tuple(_check_k(k) for k in ks)
    if len(ks) < 1:
        raise ValueError("need at least one k")
    if any(b <= a for a, b in zip(ks, ks[1:])):
        raise ValueError("k values must be strictly increasing")
    errors = tuple(sup_error(d, k, grid) for k in ks)
    if max(errors) < INVARIANT_TOL:
        return ConvergenceReport(density=d.name, ks=ks, sup_errors=errors,
                                 fitted_order=float("nan"), label="invariant")
    label = "empirical" if d.discontinuous else "fit"
    if len(ks) < 3:
        order = float("nan")
    else:
        order = float(np.polyfit(np.log(np.asarray(ks, dtype=float)),
                                 np.log(np.asarray(errors)), 1)[0])
    return ConvergenceReport(density=d.name, ks=ks, sup_errors=errors,
                             fitted_order=order, label=label)


def mass_left_of_zero(d, k):
    """P(T_k(X) < 0), the quantity whose oscillation traces the dance of a
    centered bump between the endpoints before it settles into the limit."""
    return float(pushforward_cdf(d, k, 0.0))


@lru_cache(maxsize=8)
def _gl_rule(nodes):
    return np.polynomial.legendre.leggauss(nodes)


def _panel_breaks(d, k):
    # beta values where some preimage angle crosses an interior pdf jump;
    # integrating panelwise keeps Gauss-Legendre spectrally accurate
    breaks = {0.0, float(np.pi)}
    m = k // 2
    for xstar in d.breakpoints:
        tstar = float(np.arccos(xstar))
        candidates = []
        for j in range(1, m + 1):
            candidates.append(_TWO_PI * j - k * tstar)
            candidates.append(k * tstar - _TWO_PI * (j - 1))
        if k % 2 == 1:
            candidates.append(k * tstar - _TWO_PI * m)
        for beta in candidates:
            if 0.0 < beta < np.pi:
                breaks.add(float(beta))
    return sorted(breaks)


def pushforward_mass(d, k, nodes=64):
    """Total mass of the pushforward, integrated in angle space.

    Substituting z = cos(beta) turns the singular integral of f_k over
    (-1, 1) into the smooth integral of S_k(cos beta) over (0, pi), handled
    by composite Gauss-Legendre with panel breaks at the images of pdf
    jumps. Equals 1 up to quadrature error for any correct density.
    """
    k = _check_k(k)
    if int(nodes) != nodes or nodes < 4:
        raise ValueError(f"need at least 4 quadrature nodes per panel, got {nodes!r}")
    x, w = _gl_rule(int(nodes))
    breaks = _panel_breaks(d, k)
    betas = []
    weights = []
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        half = 0.5 * (hi - lo)
        betas.append(half * x + 0.5 * (hi + lo))
        weights.append(half * w)
    beta = np.concatenate(betas)
    weight = np.concatenate(weights)
    return float(np.dot(weight, _bounded_from_beta(d, k, beta)))


@dataclass(frozen=True)
class PushforwardResult:
    """Exact pushforward evaluated on a grid, with the limit alongside."""

    density: str
    k: int
    z: np.ndarray
    pdf: np.ndarray
    bounded: np.ndarray
    limit_pdf: np.ndarray
    abs_error: np.ndarray


def pushforward_on_grid(d, k, grid=201):
    """Evaluate f_k, S_k, the arcsine limit, and |S_k - 1/pi| on the grid."""
    k = _check_k(k)
    z = default_grid(grid)
    bounded = bounded_factor(d, k, z)
    root = np.sqrt((1.0 - z) * (1.0 + z))
    return PushforwardResult(
        density=d.name, k=k, z=z,
        pdf=bounded / root,
        bounded=bounded,
        limit_pdf=LIMIT_BOUNDED_FACTOR / root,
        abs_error=np.abs(bounded - LIMIT_BOUNDED_FACTOR),
    )
