"""Poisson photon-number weights in log space.

:created: 2026-10-17

A coherent state with mean photon number ``nbar`` holds ``n`` photons with
probability ``exp(-nbar) * nbar**n / n!``. For ``nbar`` up to ``1e12`` neither the
power nor the factorial fits in a float, and the textbook log form

    -nbar + n * ln(nbar) - lnGamma(n + 1)

subtracts numbers near ``3e13`` to get an answer near ``-15``. That loses every
digit the series needs. The same value is computed here in the saddle-point form::

    ln p(n) = -ln(2 pi n) / 2 - stirlerr(n) - bd0(n, nbar)

where ``stirlerr`` is the remainder of Stirling's formula and ``bd0`` is the
deviance ``n ln(n / nbar) + nbar - n``. Both are small and computed without
cancellation.

Only a window ``[n_min, n_max]`` around ``nbar`` carries weight worth summing. The
window is ``nbar +/- k * sqrt(nbar)`` with ``k = 8`` (more for tighter tolerances)
and a floor of 30 terms. For ``nbar <= 1e6`` the discarded tail mass is checked
against the exact Poisson tails and the window widened until it fits. Above that the
Gaussian tail rule is used. This is an approximation, though skewness at that size is
below ``1e-3``.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from typing import Tuple

import numpy as np
import numpy.typing as npt
from scipy import special, stats

DEFAULT_TAIL_TOL = 1e-12
DEFAULT_WINDOW_SIGMAS = 8.0
WINDOW_FLOOR = 30
EXACT_TAIL_LIMIT = 1e6

# beneath this n, lnGamma is small enough to subtract the Stirling terms directly
_STIRLING_SERIES_START = 16
# |d| below this uses the power series for (1 + d) ln(1 + d) - d
_BD0_SERIES_LIMIT = 0.1
_BD0_SERIES_TERMS = 30
_HALF_LN_2PI = 0.5 * math.log(2 * math.pi)

FloatArray = npt.NDArray[np.float64]
IntArray = npt.NDArray[np.int64]
WindowArrays = Tuple[IntArray, FloatArray, FloatArray]


def _validate_nbar(nbar: float) -> None:
    """Raise a ValueError if nbar is not a finite positive number.

    :param nbar: mean photon number
    :raise ValueError: if nbar <= 0 or not finite
    """
    if not 0 < nbar < math.inf:
        msg = f"nbar must be a finite positive number, got {nbar!r}"
        raise ValueError(msg)


def _validate_tail_tol(tail_tol: float) -> None:
    """Raise a ValueError if tail_tol is not in (0, 1).

    :param tail_tol: tolerated Poisson mass outside the summation window
    :raise ValueError: if tail_tol is not strictly between 0 and 1
    """
    if not 0 < tail_tol < 1:
        msg = f"tail_tol must be in (0, 1), got {tail_tol!r}"
        raise ValueError(msg)


def _stirlerr(n: FloatArray) -> FloatArray:
    """Error of Stirling's approximation, lnGamma(n+1) - ln(sqrt(2 pi n) (n/e)^n).

    :param n: positive values
    :return: stirlerr(n) for each value
    """
    small = n < _STIRLING_SERIES_START
    n_small = np.where(small, n, 1.0)
    direct = special.gammaln(n_small + 1) - (n_small + 0.5) * np.log(n_small)
    direct += n_small - _HALF_LN_2PI

    n_large = np.where(small, float(_STIRLING_SERIES_START), n)
    inv2 = 1.0 / (n_large * n_large)
    series = (
        1 / 12 - inv2 * (1 / 360 - inv2 * (1 / 1260 - inv2 * (1 / 1680)))
    ) / n_large
    return np.where(small, direct, series)


def _bd0(n: FloatArray, nbar: float) -> FloatArray:
    """Deviance term n ln(n / nbar) + nbar - n, without cancellation.

    :param n: positive values
    :param nbar: mean photon number
    :return: bd0(n, nbar) for each value (always >= 0)

    With d = (n - nbar) / nbar, bd0 = nbar * ((1 + d) ln(1 + d) - d). Near d = 0
    that bracket is a difference of nearly equal numbers, so it is summed as the
    alternating series d^2/2 - d^3/6 + d^4/12 - ... instead.
    """
    d = (n - nbar) / nbar
    near = np.abs(d) < _BD0_SERIES_LIMIT
    d_near = np.where(near, d, 0.0)
    series = np.zeros_like(d_near)
    power = d_near * d_near
    for k in range(2, _BD0_SERIES_TERMS + 2):
        series += power / (k * (k - 1))
        power = -power * d_near
    d_far = np.where(near, 1.0, d)
    direct = (1 + d_far) * np.log1p(d_far) - d_far
    return nbar * np.where(near, series, direct)


def poisson_log_weights(n: npt.ArrayLike, nbar: float) -> FloatArray:
    """Log Poisson weights for an array of photon numbers.

    :param n: non-negative integers
    :param nbar: mean photon number (> 0)
    :return: ln(exp(-nbar) nbar^n / n!) for each n
    :raise ValueError: if nbar is not positive or any n is negative
    """
    _validate_nbar(nbar)
    n_arr = np.asarray(n, dtype=np.float64)
    if np.any(n_arr < 0):
        msg = "photon numbers must be non-negative"
        raise ValueError(msg)
    positive = n_arr > 0
    n_pos = np.where(positive, n_arr, 1.0)
    log_w = -0.5 * np.log(n_pos) - _HALF_LN_2PI - _stirlerr(n_pos) - _bd0(n_pos, nbar)
    return np.where(positive, log_w, -nbar)


def poisson_log_weight(n: int, nbar: float) -> float:
    """Log Poisson weight, -nbar + n ln(nbar) - lnGamma(n+1).

    :param n: non-negative photon number
    :param nbar: mean photon number (> 0)
    :return: log of the probability of n photons

        >>> poisson_log_weight(0, 1.0)
        -1.0
    """
    return float(poisson_log_weights(np.array([n]), nbar)[0])


@dataclasses.dataclass(frozen=True)
class TruncationWindow:
    """Photon numbers kept in a truncated Poisson sum.

    :param n_min: first photon number kept
    :param n_max: last photon number kept
    :param tail_mass_bound: Poisson mass outside [n_min, n_max]
    :param exact: True if tail_mass_bound comes from exact Poisson tails, False if
        from the Gaussian tail rule
    """

    n_min: int
    n_max: int
    tail_mass_bound: float
    exact: bool = True

    def __post_init__(self) -> None:
        """Check ordering and bounds.

        :raise ValueError: if the window is empty, negative, or the bound is not a
            probability
        """
        if not 0 <= self.n_min <= self.n_max:
            msg = f"need 0 <= n_min <= n_max, got [{self.n_min}, {self.n_max}]"
            raise ValueError(msg)
        if not 0 <= self.tail_mass_bound < 1:
            msg = f"tail_mass_bound must be in [0, 1), got {self.tail_mass_bound}"
            raise ValueError(msg)

    def __len__(self) -> int:
        """Number of photon numbers in the window.

        :return: n_max - n_min + 1
        """
        return self.n_max - self.n_min + 1

    def __contains__(self, n: object) -> bool:
        """Is a photon number inside the window?

        :param n: photon number
        :return: True if n_min <= n <= n_max
        """
        return isinstance(n, (int, np.integer)) and self.n_min <= n <= self.n_max

    @property
    def photon_numbers(self) -> IntArray:
        """Every photon number in the window, ascending.

        :return: integer array n_min .. n_max
        """
        return np.arange(self.n_min, self.n_max + 1, dtype=np.int64)


def _exact_tail_mass(n_min: int, n_max: int, nbar: float) -> float:
    """Poisson mass below n_min plus mass above n_max.

    :param n_min: first photon number kept
    :param n_max: last photon number kept
    :param nbar: mean photon number
    :return: exact tail mass from the regularized incomplete gamma function
    """
    lower = float(stats.poisson.cdf(n_min - 1, nbar)) if n_min > 0 else 0.0
    return lower + float(stats.poisson.sf(n_max, nbar))


def _gaussian_tail_mass(n_min: int, n_max: int, nbar: float) -> float:
    """Normal approximation to the Poisson mass outside a window.

    :param n_min: first photon number kept
    :param n_max: last photon number kept
    :param nbar: mean photon number
    :return: approximate tail mass
    """
    sigma = math.sqrt(nbar)
    lower = float(stats.norm.sf((nbar - n_min) / sigma)) if n_min > 0 else 0.0
    return lower + float(stats.norm.sf((n_max - nbar) / sigma))


def truncation_window(
    nbar: float, tail_tol: float = DEFAULT_TAIL_TOL
) -> TruncationWindow:
    """Choose the photon numbers worth summing for a given nbar.

    :param nbar: mean photon number (> 0)
    :param tail_tol: largest Poisson mass allowed outside the window
    :return: a TruncationWindow with tail mass <= tail_tol
    :raise ValueError: if nbar or tail_tol is out of range
    """
    _validate_nbar(nbar)
    _validate_tail_tol(tail_tol)
    sigmas = max(DEFAULT_WINDOW_SIGMAS, 1.1 * float(stats.norm.isf(tail_tol / 2)))
    sigma = math.sqrt(nbar)
    half_width = math.ceil(sigmas * sigma)
    center = math.floor(nbar)
    n_min = max(0, center - half_width)
    n_max = max(center + half_width, WINDOW_FLOOR)

    if nbar > EXACT_TAIL_LIMIT:
        tail = _gaussian_tail_mass(n_min, n_max, nbar)
        return TruncationWindow(n_min, n_max, tail, exact=False)

    step = max(1, math.ceil(sigma))
    tail = _exact_tail_mass(n_min, n_max, nbar)
    while tail > tail_tol:
        n_min = max(0, n_min - step)
        n_max += step
        tail = _exact_tail_mass(n_min, n_max, nbar)
    return TruncationWindow(n_min, n_max, tail, exact=True)


@functools.lru_cache(maxsize=8)
def window_arrays(nbar: float, tail_tol: float = DEFAULT_TAIL_TOL) -> WindowArrays:
    """Photon numbers, Rabi angular frequencies, and weights for one window.

    :param nbar: mean photon number (> 0)
    :param tail_tol: largest Poisson mass allowed outside the window
    :return: (n, 2 * sqrt(n + 1), weight) arrays, ordered by descending weight so
        that a running sum starts at the mode and works outward

    Results are cached and marked read-only. Callers must not write to them.
    """
    window = truncation_window(nbar, tail_tol)
    n = window.photon_numbers
    weights = np.exp(poisson_log_weights(n, nbar))
    order = np.argsort(-weights, kind="stable")
    n = n[order]
    weights = weights[order]
    frequencies = 2.0 * np.sqrt(n + 1.0)
    for array in (n, frequencies, weights):
        array.setflags(write=False)
    return n, frequencies, weights


def window_mass(nbar: float, tail_tol: float = DEFAULT_TAIL_TOL) -> float:
    """Poisson mass inside the truncation window.

    :param nbar: mean photon number (> 0)
    :param tail_tol: largest Poisson mass allowed outside the window
    :return: compensated sum of the window weights, in [1 - tail_tol, 1] up to
        floating-point rounding
    """
    _, _, weights = window_arrays(nbar, tail_tol)
    return math.fsum(weights.tolist())
