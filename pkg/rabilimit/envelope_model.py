"""Closed-form collapse envelope and Rabi frequency.

:created: 2026-10-17

Before the first revival, the coherent-state Rabi signal is well described by one
cosine under a Gaussian envelope::

    W(tau) ~ cos(2 sqrt(nbar + 1) tau) * exp(-nbar tau^2 / (2 (nbar + 1)))

valid for ``tau < sqrt(nbar)``. Outside that range ``w_envelope`` still returns a
value (plots want whole curves) but warns with ``EnvelopeDomainWarning``.

Every function takes ``nbar >= 0``. ``nbar = 0`` is the vacuum Rabi case.
"""

from __future__ import annotations

import math
import warnings

import numpy as np
import numpy.typing as npt
from paragraphs import par

FloatArray = npt.NDArray[np.float64]


class EnvelopeDomainWarning(UserWarning):
    """The envelope approximation was evaluated at tau >= sqrt(nbar)."""


def _validate(tau: float, nbar: float) -> None:
    """Raise a ValueError for negative tau or nbar.

    :param tau: dimensionless time g * t
    :param nbar: mean photon number
    :raise ValueError: if either is negative or not finite
    """
    if not 0 <= nbar < math.inf:
        msg = f"nbar must be finite and >= 0, got {nbar!r}"
        raise ValueError(msg)
    if not 0 <= tau < math.inf:
        msg = f"tau must be finite and >= 0, got {tau!r}"
        raise ValueError(msg)


def _collapse_rate(nbar: float) -> float:
    """Coefficient a in exp(-a tau^2).

    :param nbar: mean photon number
    :return: nbar / (2 (nbar + 1))
    """
    return nbar / (2 * (nbar + 1))


def gauss_envelope(tau: float, nbar: float) -> float:
    """Gaussian collapse envelope.

    :param tau: dimensionless time g * t (>= 0)
    :param nbar: mean photon number (>= 0)
    :return: exp(-nbar tau^2 / (2 (nbar + 1))), in (0, 1]
    """
    _validate(tau, nbar)
    return math.exp(-_collapse_rate(nbar) * tau * tau)


def envelope_loss(tau: float, nbar: float) -> float:
    """Amplitude the envelope has lost by tau.

    :param tau: dimensionless time g * t (>= 0)
    :param nbar: mean photon number (>= 0)
    :return: 1 - gauss_envelope(tau, nbar), accurate when the loss is tiny
    """
    _validate(tau, nbar)
    return -math.expm1(-_collapse_rate(nbar) * tau * tau)


def envelope_limit(tau: float) -> float:
    """Envelope for infinitely many photons, exp(-tau^2 / 2).

    :param tau: dimensionless time g * t (>= 0)
    :return: the nbar -> infinity limit of gauss_envelope
    """
    _validate(tau, 0.0)
    return math.exp(-0.5 * tau * tau)


def in_validity_domain(tau: float, nbar: float) -> bool:
    """Is the envelope approximation valid here?

    :param tau: dimensionless time g * t
    :param nbar: mean photon number
    :return: True if tau < sqrt(nbar)
    """
    return tau < math.sqrt(nbar)


def rabi_angular_frequency(nbar: float) -> float:
    """Angular frequency of the mean Rabi oscillation per unit tau.

    :param nbar: mean photon number (>= 0)
    :return: 2 sqrt(nbar + 1)

        >>> rabi_angular_frequency(3)
        4.0
    """
    _validate(0.0, nbar)
    return 2 * math.sqrt(nbar + 1)


def rabi_period(nbar: float) -> float:
    """Period of the mean Rabi oscillation in tau units.

    :param nbar: mean photon number (>= 0)
    :return: pi / sqrt(nbar + 1)
    """
    _validate(0.0, nbar)
    return math.pi / math.sqrt(nbar + 1)


def periods_in_interval(nbar: float, tau_len: float) -> float:
    """How many Rabi periods fit in an interval of tau.

    :param nbar: mean photon number (>= 0)
    :param tau_len: interval length (> 0)
    :return: tau_len * sqrt(nbar + 1) / pi
    :raise ValueError: if tau_len is not positive
    """
    _validate(0.0, nbar)
    if not tau_len > 0:
        msg = f"tau_len must be positive, got {tau_len!r}"
        raise ValueError(msg)
    return tau_len * math.sqrt(nbar + 1) / math.pi


def w_envelope(tau: float, nbar: float) -> float:
    """Approximate Rabi signal, one cosine under the Gaussian envelope.

    :param tau: dimensionless time g * t (>= 0)
    :param nbar: mean photon number (>= 0)
    :return: cos(2 sqrt(nbar + 1) tau) * gauss_envelope(tau, nbar)

    Warns EnvelopeDomainWarning when tau >= sqrt(nbar), where the approximation
    no longer holds. The value is returned anyway.
    """
    _validate(tau, nbar)
    if not in_validity_domain(tau, nbar):
        msg = par(
            f"""w_envelope evaluated at tau={tau} >= sqrt(nbar)={math.sqrt(nbar)}.
            The Gaussian-envelope approximation is not valid there."""
        )
        warnings.warn(msg, EnvelopeDomainWarning, stacklevel=2)
    return math.cos(rabi_angular_frequency(nbar) * tau) * gauss_envelope(tau, nbar)


def gauss_envelope_values(taus: npt.ArrayLike, nbar: float) -> FloatArray:
    """Vectorized gauss_envelope for a grid of tau values.

    :param taus: tau values (>= 0)
    :param nbar: mean photon number (>= 0)
    :return: envelope at each tau
    """
    tau_arr = np.asarray(taus, dtype=np.float64)
    return np.exp(-_collapse_rate(nbar) * tau_arr * tau_arr)


def w_envelope_values(taus: npt.ArrayLike, nbar: float) -> FloatArray:
    """Vectorized w_envelope for a grid of tau values. Does not warn.

    :param taus: tau values (>= 0)
    :param nbar: mean photon number (>= 0)
    :return: approximate W at each tau
    """
    tau_arr = np.asarray(taus, dtype=np.float64)
    omega = rabi_angular_frequency(nbar)
    return np.cos(omega * tau_arr) * gauss_envelope_values(tau_arr, nbar)
