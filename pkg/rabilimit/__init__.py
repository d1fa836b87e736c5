"""Import the public functions into the rabilimit namespace.

:created: 2026-10-17
"""

from rabilimit.circuit_depth import (
    Circuit,
    CircuitParseError,
    logical_depth,
    parse_circuit,
    read_circuit,
)
from rabilimit.decoherence_limit import (
    LimitMethod,
    feasibility,
    limit_estimate,
    n_chi_closed_form,
    n_chi_cumulative,
    nbar_required,
)
from rabilimit.envelope_model import gauss_envelope, rabi_period, w_envelope
from rabilimit.pulse_physics import CoherentPulse, nbar_from_pulse
from rabilimit.rabi_series import count_periods_by_zero_crossings, sample_trace, w_exact

__all__ = [
    "Circuit",
    "CircuitParseError",
    "CoherentPulse",
    "LimitMethod",
    "count_periods_by_zero_crossings",
    "feasibility",
    "gauss_envelope",
    "limit_estimate",
    "logical_depth",
    "n_chi_closed_form",
    "n_chi_cumulative",
    "nbar_from_pulse",
    "nbar_required",
    "parse_circuit",
    "rabi_period",
    "read_circuit",
    "sample_trace",
    "w_envelope",
    "w_exact",
]
