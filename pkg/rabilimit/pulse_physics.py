"""Mean photon number of a coherent drive pulse.

:created: 2026-10-17

A gate is driven by one coherent-state pulse. The pulse carries, on average,

    nbar = (duration * peak_power) / (h * frequency)

photons. That number sets how long the Rabi oscillation it drives stays coherent,
so everything downstream starts here.

The exact SI Planck constant is the default. Hand calculations often round the photon
energy to one significant figure (``h * 1e15 Hz ~ 6e-19 J``). Pass that rounded value
as ``photon_energy_override`` to reproduce such a calculation. Nothing in this module
rounds on its own.
"""

from __future__ import annotations

import dataclasses

from scipy import constants
from typing_extensions import Self

PLANCK_CONSTANT = constants.h
SPEED_OF_LIGHT = constants.c


class PulseParameterError(ValueError):
    """A physical pulse quantity is missing, zero, or negative."""


def _require_positive(name: str, value: float) -> None:
    """Raise a PulseParameterError if value is not a finite positive number.

    :param name: parameter name for the error message
    :param value: value to check
    :raise PulseParameterError: if value <= 0 or value is not finite
    """
    if not value > 0 or value == float("inf"):
        msg = f"{name} must be a finite positive number, got {value!r}"
        raise PulseParameterError(msg)


def frequency_from_wavelength(wavelength: float) -> float:
    """Convert a vacuum wavelength to a frequency.

    :param wavelength: wavelength in meters
    :return: frequency in Hz (c / wavelength)
    :raise PulseParameterError: if wavelength is not positive

        >>> round(frequency_from_wavelength(3e-7) / 1e14, 3)
        9.993
    """
    _require_positive("wavelength", wavelength)
    return SPEED_OF_LIGHT / wavelength


@dataclasses.dataclass(frozen=True)
class CoherentPulse:
    """One coherent drive pulse.

    :param frequency: carrier frequency in Hz
    :param duration: pulse width in seconds
    :param peak_power: peak power in watts
    :param photon_energy_override: optional photon energy in joules. When given, it
        replaces ``h * frequency`` everywhere.
    """

    frequency: float
    duration: float
    peak_power: float
    photon_energy_override: float | None = None

    def __post_init__(self) -> None:
        """Validate every physical quantity.

        :raise PulseParameterError: if any quantity is not strictly positive
        """
        _require_positive("frequency", self.frequency)
        _require_positive("duration", self.duration)
        _require_positive("peak_power", self.peak_power)
        if self.photon_energy_override is not None:
            _require_positive("photon_energy_override", self.photon_energy_override)

    @classmethod
    def from_wavelength(
        cls,
        wavelength: float,
        duration: float,
        peak_power: float,
        photon_energy_override: float | None = None,
    ) -> Self:
        """Create a pulse from a vacuum wavelength instead of a frequency.

        :param wavelength: wavelength in meters
        :param duration: pulse width in seconds
        :param peak_power: peak power in watts
        :param photon_energy_override: optional photon energy in joules
        :return: a new CoherentPulse with frequency c / wavelength
        """
        return cls(
            frequency_from_wavelength(wavelength),
            duration,
            peak_power,
            photon_energy_override,
        )


def photon_energy(pulse: CoherentPulse) -> float:
    """Energy of one photon in the pulse.

    :param pulse: a CoherentPulse instance
    :return: photon_energy_override if set, else h * frequency (joules)
    """
    if pulse.photon_energy_override is not None:
        return pulse.photon_energy_override
    return PLANCK_CONSTANT * pulse.frequency


def pulse_energy(pulse: CoherentPulse) -> float:
    """Total energy of the pulse, duration * peak_power.

    :param pulse: a CoherentPulse instance
    :return: energy in joules
    """
    return pulse.duration * pulse.peak_power


def nbar_from_pulse(pulse: CoherentPulse) -> float:
    """Mean photon number of the coherent state carried by a pulse.

    :param pulse: a CoherentPulse instance
    :return: duration * peak_power / photon_energy, always > 0

        >>> pulse = CoherentPulse(1e15, 1e-7, 1e-3, photon_energy_override=6e-19)
        >>> f"{nbar_from_pulse(pulse):.4e}"
        '1.6667e+08'
    """
    return pulse.duration * pulse.peak_power / photon_energy(pulse)


def peak_power_for_nbar(
    nbar: float, duration: float, energy_per_photon: float
) -> float:
    """Peak power that would give a pulse a target mean photon number.

    :param nbar: target mean photon number
    :param duration: pulse width in seconds
    :param energy_per_photon: photon energy in joules
    :return: peak power in watts (inverse of ``nbar_from_pulse``)
    :raise PulseParameterError: if any argument is not positive

    Raising the peak power is the only knob left once frequency and gate speed are
    fixed. The noise cost of doing so is not modeled here.
    """
    _require_positive("nbar", nbar)
    _require_positive("duration", duration)
    _require_positive("energy_per_photon", energy_per_photon)
    return nbar * energy_per_photon / duration
