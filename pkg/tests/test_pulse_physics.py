"""Mean photon number from pulse parameters.

:created: 2026-10-17
"""

import math

import pytest

from rabilimit.pulse_physics import (
    PLANCK_CONSTANT,
    SPEED_OF_LIGHT,
    CoherentPulse,
    PulseParameterError,
    frequency_from_wavelength,
    nbar_from_pulse,
    peak_power_for_nbar,
    photon_energy,
    pulse_energy,
)


class TestConstants:
    def test_exact_si_values(self) -> None:
        """h and c are the exact SI values."""
        assert PLANCK_CONSTANT == 6.62607015e-34
        assert SPEED_OF_LIGHT == 299792458.0


class TestPhotonEnergy:
    def test_exact_h(self) -> None:
        """No override: h * frequency."""
        pulse = CoherentPulse(1e15, 1e-7, 1e-3)
        assert photon_energy(pulse) == pytest.approx(6.626e-19, rel=1e-4)

    def test_override(self) -> None:
        """Override replaces h * frequency exactly."""
        pulse = CoherentPulse(1e15, 1e-7, 1e-3, photon_energy_override=6e-19)
        assert photon_energy(pulse) == 6e-19

    def test_lower_frequency(self) -> None:
        """9e14 Hz photon."""
        pulse = CoherentPulse(9e14, 1e-4, 1e-3)
        assert photon_energy(pulse) == pytest.approx(5.963e-19, rel=1e-4)


class TestNbarFromPulse:
    def test_hand_calculation(self) -> None:
        """100 ns, 1 mW, 6e-19 J photons -> 5/3 * 1e8."""
        pulse = CoherentPulse(1e15, 1e-7, 1e-3, photon_energy_override=6e-19)
        assert nbar_from_pulse(pulse) == pytest.approx(1.6667e8, rel=1e-4)

    def test_long_pulse(self) -> None:
        """100 us, 1 mW, 6e-19 J photons -> 1/6 * 1e12."""
        pulse = CoherentPulse(9e14, 1e-4, 1e-3, photon_energy_override=6e-19)
        assert nbar_from_pulse(pulse) == pytest.approx(1.6667e11, rel=1e-4)

    def test_exact_h(self) -> None:
        """Exact h gives a slightly smaller nbar than the rounded photon energy."""
        pulse = CoherentPulse(1e15, 1e-7, 1e-3)
        assert nbar_from_pulse(pulse) == pytest.approx(1.509e8, rel=1e-3)

    def test_override_is_full_precision(self) -> None:
        """With an override E, nbar is duration * peak_power / E exactly."""
        pulse = CoherentPulse(1e15, 3.7e-6, 2.2e-3, photon_energy_override=4.1e-19)
        assert nbar_from_pulse(pulse) == 3.7e-6 * 2.2e-3 / 4.1e-19

    @pytest.mark.parametrize("field", ["duration", "peak_power"])
    def test_linear(self, field: str) -> None:
        """Doubling duration or peak power doubles nbar."""
        base = {"frequency": 1e15, "duration": 1e-7, "peak_power": 1e-3}
        doubled = {**base, field: base[field] * 2}
        once = nbar_from_pulse(CoherentPulse(**base))
        twice = nbar_from_pulse(CoherentPulse(**doubled))
        assert twice == pytest.approx(2 * once, rel=1e-15)

    def test_pulse_energy(self) -> None:
        """100 ns at 1 mW carries 1e-10 J."""
        pulse = CoherentPulse(1e15, 1e-7, 1e-3)
        assert pulse_energy(pulse) == pytest.approx(1e-10)


class TestValidation:
    @pytest.mark.parametrize(
        "args",
        [
            (0.0, 1e-7, 1e-3),
            (1e15, -1e-7, 1e-3),
            (1e15, 1e-7, 0.0),
            (1e15, 1e-7, math.inf),
            (1e15, 1e-7, math.nan),
        ],
    )
    def test_non_positive(self, args: tuple[float, float, float]) -> None:
        """Every physical quantity must be finite and positive."""
        with pytest.raises(PulseParameterError):
            _ = CoherentPulse(*args)

    def test_bad_override(self) -> None:
        """A zero photon energy is rejected."""
        with pytest.raises(PulseParameterError):
            _ = CoherentPulse(1e15, 1e-7, 1e-3, photon_energy_override=0.0)

    def test_is_value_error(self) -> None:
        """Callers catching ValueError also catch pulse errors."""
        assert issubclass(PulseParameterError, ValueError)


class TestWavelength:
    def test_frequency(self) -> None:
        """300 nm light is just under 1e15 Hz."""
        assert frequency_from_wavelength(3e-7) == pytest.approx(9.993e14, rel=1e-4)

    def test_from_wavelength(self) -> None:
        """Alternate constructor converts with c."""
        pulse = CoherentPulse.from_wavelength(3e-7, 1e-7, 1e-3)
        assert pulse.frequency == SPEED_OF_LIGHT / 3e-7

    def test_bad_wavelength(self) -> None:
        """Negative wavelength is rejected."""
        with pytest.raises(PulseParameterError):
            _ = frequency_from_wavelength(-3e-7)


class TestPeakPowerForNbar:
    def test_inverts_nbar_from_pulse(self) -> None:
        """Peak power for a target nbar reproduces that nbar."""
        power = peak_power_for_nbar(1.6667e11, 1e-7, 6e-19)
        pulse = CoherentPulse(1e15, 1e-7, power, photon_energy_override=6e-19)
        assert nbar_from_pulse(pulse) == pytest.approx(1.6667e11, rel=1e-12)

    def test_thousandfold(self) -> None:
        """1000x the photons at fixed duration needs 1000x the power."""
        assert peak_power_for_nbar(1.6667e11, 1e-7, 6e-19) == pytest.approx(
            1000 * peak_power_for_nbar(1.6667e8, 1e-7, 6e-19)
        )
