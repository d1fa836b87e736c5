"""Exact coherent-state Rabi signal by truncated Poisson summation.

:created: 2026-10-17

An atom starting in the excited state and driven by a coherent field of mean photon
number ``nbar`` is found excited at time ``t`` with probability::

    P(t) = (1 + sum_n p(n) cos(2 g sqrt(n + 1) t)) / 2

With ``tau = g t`` the rescaled signal is::

    W(tau) = 2 P(tau / g) - 1 = sum_n p(n) cos(2 sqrt(n + 1) tau)

Each term is a cosine weighted by a Poisson probability ``p(n)``. The sum runs over
the truncation window from ``poisson_weights``, mode first, with compensated
(``math.fsum``) accumulation. Every tau point is independent of every other, so a
trace may be split across workers and reassembled in any order with identical
results.
"""

from __future__ import annotations

import dataclasses
import math
import warnings

import numpy as np
from paragraphs import par

from rabilimit.envelope_model import (
    EnvelopeDomainWarning,
    gauss_envelope_values,
    in_validity_domain,
    w_envelope_values,
)
from rabilimit.poisson_weights import (
    DEFAULT_TAIL_TOL,
    FloatArray,
    TruncationWindow,
    poisson_log_weight,
    truncation_window,
    window_arrays,
)

__all__ = [
    "DEFAULT_TAIL_TOL",
    "DegenerateGridWarning",
    "MissingCouplingError",
    "RabiField",
    "RabiTrace",
    "TruncationWindow",
    "count_periods_by_zero_crossings",
    "excited_probability",
    "poisson_log_weight",
    "sample_trace",
    "truncation_window",
    "w_exact",
]

# cap on floats held in one block of cos(tau * omega) evaluations
_BLOCK_ELEMENTS = 2**22


class MissingCouplingError(ValueError):
    """A time in seconds was given, but the field has no coupling constant g."""


class DegenerateGridWarning(UserWarning):
    """A sampled trace has consecutive exact zeros; crossings may be miscounted."""


@dataclasses.dataclass(frozen=True)
class RabiField:
    """Drive description in dimensionless form.

    :param nbar: mean photon number (> 0)
    :param g: optional atom-field coupling in rad/s. Only used to convert a time t
        in seconds to tau = g * t.
    """

    nbar: float
    g: float | None = None

    def __post_init__(self) -> None:
        """Validate nbar and g.

        :raise ValueError: if nbar or g (when present) is not positive
        """
        if not 0 < self.nbar < math.inf:
            msg = f"nbar must be a finite positive number, got {self.nbar!r}"
            raise ValueError(msg)
        if self.g is not None and not 0 < self.g < math.inf:
            msg = f"g must be a finite positive number, got {self.g!r}"
            raise ValueError(msg)

    def tau_at(self, t: float) -> float:
        """Convert a time in seconds to dimensionless tau.

        :param t: time in seconds
        :return: g * t
        :raise MissingCouplingError: if g is not set
        """
        if self.g is None:
            msg = "RabiField has no coupling g, so times in seconds are undefined"
            raise MissingCouplingError(msg)
        return self.g * t


@dataclasses.dataclass(frozen=True, eq=False)
class RabiTrace:
    """W(tau) sampled on a grid with three channels.

    :param nbar: mean photon number of the drive
    :param tau_values: strictly increasing tau grid (>= 0)
    :param w_exact: truncated-series W at each tau
    :param w_envelope: cosine-under-envelope approximation at each tau
    :param gauss_envelope: bare Gaussian envelope at each tau
    """

    nbar: float
    tau_values: FloatArray
    w_exact: FloatArray
    w_envelope: FloatArray
    gauss_envelope: FloatArray

    def __post_init__(self) -> None:
        """Check that every channel is aligned with the grid.

        :raise ValueError: if lengths differ or tau_values is not increasing
        """
        size = len(self.tau_values)
        channels = (self.w_exact, self.w_envelope, self.gauss_envelope)
        if any(len(x) != size for x in channels):
            msg = "every RabiTrace channel must have one value per tau"
            raise ValueError(msg)
        if size and (self.tau_values[0] < 0 or np.any(np.diff(self.tau_values) <= 0)):
            msg = "tau_values must be non-negative and strictly increasing"
            raise ValueError(msg)

    def __len__(self) -> int:
        """Number of samples.

        :return: length of tau_values
        """
        return len(self.tau_values)

    def time_values(self, g: float) -> FloatArray:
        """The tau grid as times in seconds.

        :param g: atom-field coupling in rad/s (> 0)
        :return: tau / g for each sample
        :raise ValueError: if g is not positive
        """
        if not g > 0:
            msg = f"g must be positive, got {g!r}"
            raise ValueError(msg)
        return self.tau_values / g


def partial_rabi_sum(tau: float, frequencies: FloatArray, weights: FloatArray) -> float:
    """Compensated sum of weight * cos(frequency * tau).

    :param tau: dimensionless time. Any sign; the sum is even in tau.
    :param frequencies: 2 sqrt(n + 1) for each photon number
    :param weights: Poisson weight for each photon number
    :return: the partial Rabi sum
    """
    return math.fsum((weights * np.cos(frequencies * tau)).tolist())


def w_exact(tau: float, nbar: float, tail_tol: float = DEFAULT_TAIL_TOL) -> float:
    """Rabi signal W(tau) by truncated Poisson summation.

    :param tau: dimensionless time g * t (>= 0)
    :param nbar: mean photon number (> 0)
    :param tail_tol: Poisson mass allowed outside the summation window
    :return: W(tau), within tail_tol plus rounding of the untruncated sum
    :raise ValueError: if tau is negative or nbar / tail_tol are out of range

        >>> round(w_exact(0.0, 100.0), 12)
        1.0
    """
    if not 0 <= tau < math.inf:
        msg = f"tau must be finite and >= 0, got {tau!r}"
        raise ValueError(msg)
    _, frequencies, weights = window_arrays(nbar, tail_tol)
    return partial_rabi_sum(tau, frequencies, weights)


def excited_probability(
    t: float, field: RabiField, tail_tol: float = DEFAULT_TAIL_TOL
) -> float:
    """Probability that the atom is in the excited state at time t.

    :param t: time in seconds (>= 0)
    :param field: drive with nbar and coupling g
    :param tail_tol: Poisson mass allowed outside the summation window
    :return: (1 + W(g t)) / 2
    :raise MissingCouplingError: if field.g is None
    """
    tau = field.tau_at(t)
    return (1 + w_exact(tau, field.nbar, tail_tol)) / 2


def _exact_channel(
    taus: FloatArray, nbar: float, tail_tol: float
) -> FloatArray:
    """Evaluate w_exact on a grid, a block of rows at a time.

    :param taus: tau grid
    :param nbar: mean photon number
    :param tail_tol: Poisson mass allowed outside the summation window
    :return: W at each tau
    """
    _, frequencies, weights = window_arrays(nbar, tail_tol)
    rows_per_block = max(1, _BLOCK_ELEMENTS // len(frequencies))
    values = np.empty_like(taus)
    for beg in range(0, len(taus), rows_per_block):
        block = taus[beg : beg + rows_per_block]
        terms = weights * np.cos(np.outer(block, frequencies))
        values[beg : beg + len(block)] = [math.fsum(row) for row in terms.tolist()]
    return values


def sample_trace(
    nbar: float,
    tau_max: float,
    count: int,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> RabiTrace:
    """Sample W on a uniform grid over [0, tau_max].

    :param nbar: mean photon number (> 0)
    :param tau_max: last grid point (> 0)
    :param count: number of samples (>= 2)
    :param tail_tol: Poisson mass allowed outside the summation window
    :return: RabiTrace with exact, approximate, and envelope channels
    :raise ValueError: if tau_max <= 0 or count < 2
    """
    if not 0 < tau_max < math.inf:
        msg = f"tau_max must be a finite positive number, got {tau_max!r}"
        raise ValueError(msg)
    if count < 2:
        msg = f"a trace needs at least 2 samples, got {count}"
        raise ValueError(msg)
    if not in_validity_domain(tau_max, nbar):
        msg = par(
            f"""Trace runs to tau={tau_max}, past sqrt(nbar)={math.sqrt(nbar)}. The
            w_envelope channel is outside its validity domain there."""
        )
        warnings.warn(msg, EnvelopeDomainWarning, stacklevel=2)
    taus = np.linspace(0.0, tau_max, count)
    return RabiTrace(
        nbar=nbar,
        tau_values=taus,
        w_exact=_exact_channel(taus, nbar, tail_tol),
        w_envelope=w_envelope_values(taus, nbar),
        gauss_envelope=gauss_envelope_values(taus, nbar),
    )


def count_periods_by_zero_crossings(trace: RabiTrace) -> float:
    """Count oscillation periods in the exact channel from its sign changes.

    :param trace: a sampled RabiTrace
    :return: number of sign changes in w_exact / 2

    The grid must be fine enough that no cell holds two sign changes. That is the
    caller's job; nothing here can detect it. A sample that is exactly zero counts
    once if the signs on either side differ and not at all if they match. Runs of
    two or more exact zeros trigger a DegenerateGridWarning.
    """
    signs = np.sign(trace.w_exact)
    zeros = signs == 0
    if np.any(zeros[1:] & zeros[:-1]):
        msg = par(
            """Trace has consecutive samples exactly equal to zero. The grid may be
            degenerate and the crossing count unreliable."""
        )
        warnings.warn(msg, DegenerateGridWarning, stacklevel=2)
    nonzero = signs[~zeros]
    changes = int(np.count_nonzero(nonzero[1:] != nonzero[:-1]))
    return changes / 2
