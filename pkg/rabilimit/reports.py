"""Human-readable report text for the command line.

:created: 2026-10-17

Every function returns a list of lines and prints nothing. ``cli`` joins and writes
them. Each report starts with ``header_lines`` so a reader can see which physical
constants and which tail tolerance produced the numbers.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable

from rabilimit.decoherence_limit import LimitMethod
from rabilimit.pulse_physics import PLANCK_CONSTANT, SPEED_OF_LIGHT, photon_energy

if TYPE_CHECKING:
    from rabilimit.circuit_depth import DepthReport
    from rabilimit.decoherence_limit import FeasibilityReport, LimitEstimate
    from rabilimit.pulse_physics import CoherentPulse


def header_lines(tail_tol: float) -> list[str]:
    """Constants in force for one run.

    :param tail_tol: Poisson tail tolerance used by series evaluation
    :return: three ``# name = value`` lines
    """
    return [
        f"# h = {PLANCK_CONSTANT!r} J s",
        f"# c = {SPEED_OF_LIGHT!r} m/s",
        f"# tail_tol = {tail_tol!r}",
    ]


def format_estimate(estimate: LimitEstimate) -> str:
    """One limit estimate as ``method: value``.

    :param estimate: LimitEstimate
    :return: closed form to two decimals, integer methods as integers
    """
    if estimate.method is LimitMethod.CLOSED_FORM:
        return f"{estimate.method.value}: {estimate.value:.2f}"
    return f"{estimate.method.value}: {int(estimate.value)}"


def pulse_lines(pulse: CoherentPulse, nbar: float) -> list[str]:
    """Echo a pulse and the nbar it carries.

    :param pulse: CoherentPulse
    :param nbar: nbar_from_pulse(pulse)
    :return: one line per input, then nbar
    """
    source = "override" if pulse.photon_energy_override is not None else "h * frequency"
    return [
        f"frequency_hz: {pulse.frequency:.6e}",
        f"duration_s: {pulse.duration:.6e}",
        f"peak_power_w: {pulse.peak_power:.6e}",
        f"photon_energy_j: {photon_energy(pulse):.6e} ({source})",
        f"nbar: {nbar:.6e}",
    ]


def limit_lines(
    nbar: float, p_th: float, estimates: Iterable[LimitEstimate]
) -> list[str]:
    """Inputs and every requested estimate.

    :param nbar: mean photon number
    :param p_th: gate-error threshold
    :param estimates: LimitEstimates to list
    :return: report lines
    """
    lines = [f"nbar: {nbar:.6e}", f"p_th: {p_th:.6e}"]
    lines.extend(format_estimate(x) for x in estimates)
    return lines


def depth_lines(report: DepthReport) -> list[str]:
    """Per-qubit instruction table, one block per period, then chi.

    :param report: DepthReport from logical_depth
    :return: report lines
    """
    lines: list[str] = []
    for i, counts in enumerate(report.per_period_per_qubit):
        lines.append(f"period {i}:")
        lines.extend(f"  {qubit}: {count}" for qubit, count in counts.items())
    if report.argmax is None:
        lines.append(f"chi: {report.chi}")
    else:
        period, qubit = report.argmax
        lines.append(f"chi: {report.chi} (qubit {qubit}, period {period})")
    return lines


def verdict_lines(report: FeasibilityReport) -> list[str]:
    """Depth, limit, margin, and a one-word verdict.

    :param report: FeasibilityReport
    :return: report lines
    """
    return [
        f"chi: {report.chi}",
        f"periods_per_gate: {report.periods_per_gate:g}",
        f"required_periods: {report.required_periods}",
        format_estimate(report.limit),
        f"N: {report.limit.periods}",
        f"margin: {report.margin}",
        f"verdict: {'feasible' if report.feasible else 'infeasible'}",
    ]


def requirement_lines(
    chi: int, p_th: float, nbar: float, peak_power: float | None = None
) -> list[str]:
    """Photon number (and optionally peak power) needed to reach a depth.

    :param chi: target depth of logical operation
    :param p_th: gate-error threshold
    :param nbar: nbar_required(chi, p_th)
    :param peak_power: peak power giving that nbar, if a pulse was described
    :return: report lines
    """
    lines = [f"chi: {chi}", f"p_th: {p_th:.6e}", f"nbar_required: {nbar:.6e}"]
    if peak_power is not None:
        lines.append(f"peak_power_w: {peak_power:.6e}")
    return lines
