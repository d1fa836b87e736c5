"""Command-line front end.

:created: 2026-10-17

Subcommands::

    rabilimit nbar         mean photon number of a pulse
    rabilimit trace        sample W(tau) to CSV and count periods
    rabilimit limit        decoherence limit N for nbar and p_th
    rabilimit depth        chi of a circuit file
    rabilimit verdict      hold a circuit file against N
    rabilimit requirement  nbar (and peak power) needed for a target chi

Exit codes are a stable contract:

    0  success, or feasible for ``verdict``
    2  usage error (bad, missing, or conflicting flags, or a --method that
       cannot be evaluated for the given nbar and p_th)
    3  circuit parse error
    4  file could not be read or written
    5  ``verdict`` found the circuit infeasible
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path
from typing import Callable, Sequence

from rabilimit.circuit_depth import CircuitParseError, logical_depth, read_circuit
from rabilimit.decoherence_limit import (
    LimitMethod,
    PeakBracketError,
    all_estimates,
    feasibility,
    limit_estimate,
    nbar_required,
)
from rabilimit.poisson_weights import DEFAULT_TAIL_TOL
from rabilimit.pulse_physics import (
    PLANCK_CONSTANT,
    CoherentPulse,
    frequency_from_wavelength,
    nbar_from_pulse,
    peak_power_for_nbar,
)
from rabilimit.rabi_series import count_periods_by_zero_crossings, sample_trace
from rabilimit.reports import (
    depth_lines,
    format_estimate,
    header_lines,
    limit_lines,
    pulse_lines,
    requirement_lines,
    verdict_lines,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_IO = 4
EXIT_INFEASIBLE = 5

TRACE_COLUMNS = ("tau", "w_exact", "w_envelope", "gauss_envelope")

METHOD_FLAGS: dict[str, LimitMethod] = {
    "closed": LimitMethod.CLOSED_FORM,
    "literal": LimitMethod.CUMULATIVE_LITERAL,
    "envelope": LimitMethod.CUMULATIVE_ENVELOPE,
    "exact": LimitMethod.EXACT_PEAK,
    "per-period": LimitMethod.PER_PERIOD,
}


class UsageError(Exception):
    """Flags parsed, but do not describe a complete or consistent request."""


def _positive_float(text: str) -> float:
    """Argparse type for a finite float > 0.

    :param text: flag value
    :return: float value
    :raise argparse.ArgumentTypeError: if not a finite positive number
    """
    try:
        value = float(text)
    except ValueError as e:
        msg = f"expected a number, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from e
    if not 0 < value < math.inf:
        msg = f"expected a finite positive number, got {text!r}"
        raise argparse.ArgumentTypeError(msg)
    return value


def _threshold(text: str) -> float:
    """Argparse type for a gate-error threshold in [0, 1).

    :param text: flag value
    :return: float value
    :raise argparse.ArgumentTypeError: if outside [0, 1)
    """
    try:
        value = float(text)
    except ValueError as e:
        msg = f"expected a number, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from e
    if not 0 <= value < 1:
        msg = f"expected a threshold in [0, 1), got {text!r}"
        raise argparse.ArgumentTypeError(msg)
    return value


def _positive_threshold(text: str) -> float:
    """Argparse type for a gate-error threshold in (0, 1).

    :param text: flag value
    :return: float value
    :raise argparse.ArgumentTypeError: if outside (0, 1)
    """
    value = _threshold(text)
    if value == 0:
        msg = f"expected a threshold in (0, 1), got {text!r}"
        raise argparse.ArgumentTypeError(msg)
    return value


def _count(minimum: int) -> Callable[[str], int]:
    """Argparse type for an integer >= minimum.

    :param minimum: smallest accepted value
    :return: converter for add_argument(type=...)
    """

    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError as e:
            msg = f"expected an integer, got {text!r}"
            raise argparse.ArgumentTypeError(msg) from e
        if value < minimum:
            msg = f"expected an integer >= {minimum}, got {value}"
            raise argparse.ArgumentTypeError(msg)
        return value

    return convert


def _add_pulse_arguments(
    parser: argparse.ArgumentParser, *, with_peak_power: bool = True
) -> None:
    """Flags that describe a CoherentPulse.

    :param parser: subcommand parser to extend
    :param with_peak_power: add --peak-power-w
    """
    carrier = parser.add_mutually_exclusive_group()
    _ = carrier.add_argument("--frequency-hz", type=_positive_float)
    _ = carrier.add_argument("--wavelength-m", type=_positive_float)
    _ = parser.add_argument("--duration-s", type=_positive_float)
    if with_peak_power:
        _ = parser.add_argument("--peak-power-w", type=_positive_float)
    _ = parser.add_argument(
        "--photon-energy-j",
        type=_positive_float,
        help="replaces h * frequency (e.g. 6e-19 for a one-figure hand calculation)",
    )


def _add_limit_arguments(parser: argparse.ArgumentParser) -> None:
    """Flags shared by ``limit`` and ``verdict``.

    :param parser: subcommand parser to extend
    """
    _ = parser.add_argument("--nbar", type=_positive_float)
    _add_pulse_arguments(parser)
    _ = parser.add_argument("--pth", type=_threshold, required=True)
    _ = parser.add_argument("--method", choices=tuple(METHOD_FLAGS), default="literal")
    _ = parser.add_argument(
        "--tail-tol", type=_positive_float, default=DEFAULT_TAIL_TOL
    )


def _pulse_from_args(args: argparse.Namespace) -> CoherentPulse | None:
    """Build a pulse from the pulse flags, if any were given.

    :param args: parsed flags
    :return: CoherentPulse, or None if no pulse flag was given
    :raise UsageError: if some but not all required pulse flags were given
    """
    given = (args.frequency_hz, args.wavelength_m, args.duration_s, args.peak_power_w)
    if all(x is None for x in given) and args.photon_energy_j is None:
        return None
    carrier = args.frequency_hz or args.wavelength_m
    missing = [
        name
        for name, value in (
            ("--frequency-hz or --wavelength-m", carrier),
            ("--duration-s", args.duration_s),
            ("--peak-power-w", args.peak_power_w),
        )
        if value is None
    ]
    if missing:
        msg = f"pulse is missing {', '.join(missing)}"
        raise UsageError(msg)
    if args.wavelength_m is not None:
        return CoherentPulse.from_wavelength(
            args.wavelength_m, args.duration_s, args.peak_power_w, args.photon_energy_j
        )
    return CoherentPulse(
        args.frequency_hz, args.duration_s, args.peak_power_w, args.photon_energy_j
    )


def _nbar_from_args(args: argparse.Namespace) -> float:
    """Take nbar from --nbar or compute it from the pulse flags.

    :param args: parsed flags
    :return: mean photon number
    :raise UsageError: if neither or both are given
    """
    pulse = _pulse_from_args(args)
    if args.nbar is not None and pulse is not None:
        msg = "give --nbar or pulse flags, not both"
        raise UsageError(msg)
    if args.nbar is not None:
        return args.nbar
    if pulse is None:
        msg = "give --nbar or the pulse flags (--frequency-hz, --duration-s, ...)"
        raise UsageError(msg)
    return nbar_from_pulse(pulse)


def _emit(lines: Sequence[str]) -> None:
    """Write report lines to standard output.

    :param lines: lines without newlines
    """
    _ = sys.stdout.write("".join(x + "\n" for x in lines))


def cmd_nbar(args: argparse.Namespace) -> int:
    """Print nbar for a pulse, with its inputs echoed.

    :param args: parsed flags
    :return: exit code
    """
    pulse = _pulse_from_args(args)
    if pulse is None:
        msg = "nbar needs a carrier, --duration-s and --peak-power-w"
        raise UsageError(msg)
    _emit(header_lines(DEFAULT_TAIL_TOL) + pulse_lines(pulse, nbar_from_pulse(pulse)))
    return EXIT_OK


def trace_csv(args: argparse.Namespace) -> tuple[str, float]:
    """Sample a trace and render it as CSV.

    :param args: parsed ``trace`` flags
    :return: (CSV text, period count from zero crossings)
    """
    trace = sample_trace(args.nbar, args.tau_max, args.samples, args.tail_tol)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    _ = writer.writerow(TRACE_COLUMNS)
    channels = (trace.tau_values, trace.w_exact, trace.w_envelope, trace.gauss_envelope)
    for row in zip(*(x.tolist() for x in channels)):
        _ = writer.writerow(f"{x:.17g}" for x in row)
    return buffer.getvalue(), count_periods_by_zero_crossings(trace)


def cmd_trace(args: argparse.Namespace) -> int:
    """Write a sampled trace to CSV and print the period count.

    :param args: parsed flags
    :return: exit code
    """
    text, periods = trace_csv(args)
    with Path(args.output).open("w", encoding="utf-8", newline="") as csv_file:
        _ = csv_file.write(text)
    lines = [f"samples: {args.samples}", f"periods: {periods}"]
    _emit(header_lines(args.tail_tol) + lines)
    return EXIT_OK


def cmd_limit(args: argparse.Namespace) -> int:
    """Print the closed form and the requested estimate(s).

    :param args: parsed flags
    :return: exit code
    """
    nbar = _nbar_from_args(args)
    if args.all:
        estimates = all_estimates(nbar, args.pth, tail_tol=args.tail_tol)
    else:
        methods = dict.fromkeys([LimitMethod.CLOSED_FORM, METHOD_FLAGS[args.method]])
        estimates = [
            limit_estimate(nbar, args.pth, m, tail_tol=args.tail_tol) for m in methods
        ]
    _emit(header_lines(args.tail_tol) + limit_lines(nbar, args.pth, estimates))
    return EXIT_OK


def cmd_depth(args: argparse.Namespace) -> int:
    """Print the per-qubit table and chi of a circuit file.

    :param args: parsed flags
    :return: exit code
    """
    report = logical_depth(read_circuit(args.path))
    _emit(depth_lines(report))
    return EXIT_OK


def cmd_verdict(args: argparse.Namespace) -> int:
    """Hold a circuit file against the decoherence limit.

    :param args: parsed flags
    :return: EXIT_OK if feasible, else EXIT_INFEASIBLE
    """
    nbar = _nbar_from_args(args)
    chi = logical_depth(read_circuit(args.path)).chi
    report = feasibility(
        chi,
        nbar,
        args.pth,
        METHOD_FLAGS[args.method],
        periods_per_gate=args.periods_per_gate,
        tail_tol=args.tail_tol,
    )
    lines = [*header_lines(args.tail_tol), f"nbar: {nbar:.6e}", f"p_th: {args.pth:.6e}"]
    if report.limit.method is not LimitMethod.CLOSED_FORM:
        closed = limit_estimate(nbar, args.pth, LimitMethod.CLOSED_FORM)
        lines.append(format_estimate(closed))
    _emit(lines + verdict_lines(report))
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_requirement(args: argparse.Namespace) -> int:
    """Print the nbar, and optionally the peak power, needed to reach chi.

    :param args: parsed flags
    :return: exit code
    """
    nbar = nbar_required(args.chi, args.pth)
    peak_power = None
    if args.duration_s is not None:
        if args.photon_energy_j is not None:
            energy = args.photon_energy_j
        elif args.frequency_hz is not None:
            energy = PLANCK_CONSTANT * args.frequency_hz
        elif args.wavelength_m is not None:
            energy = PLANCK_CONSTANT * frequency_from_wavelength(args.wavelength_m)
        else:
            msg = "--duration-s needs --photon-energy-j or a carrier frequency"
            raise UsageError(msg)
        if nbar > 0:
            peak_power = peak_power_for_nbar(nbar, args.duration_s, energy)
    _emit(
        header_lines(DEFAULT_TAIL_TOL)
        + requirement_lines(args.chi, args.pth, nbar, peak_power)
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command.

    :return: ArgumentParser. Each subparser sets ``handler``.
    """
    parser = argparse.ArgumentParser(
        prog="rabilimit",
        description="Decoherence limit of coherent-field Rabi gates.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    nbar = commands.add_parser("nbar", help="mean photon number of a pulse")
    _add_pulse_arguments(nbar)
    nbar.set_defaults(handler=cmd_nbar)

    trace = commands.add_parser("trace", help="sample W(tau) to CSV")
    _ = trace.add_argument("--nbar", type=_positive_float, required=True)
    _ = trace.add_argument("--tau-max", type=_positive_float, required=True)
    _ = trace.add_argument("--samples", type=_count(2), required=True)
    _ = trace.add_argument("--tail-tol", type=_positive_float, default=DEFAULT_TAIL_TOL)
    _ = trace.add_argument("-o", "--output", required=True, help="CSV path")
    trace.set_defaults(handler=cmd_trace)

    limit = commands.add_parser("limit", help="decoherence limit N")
    _add_limit_arguments(limit)
    _ = limit.add_argument("--all", action="store_true", help="print cheap methods")
    limit.set_defaults(handler=cmd_limit)

    depth = commands.add_parser("depth", help="chi of a circuit file")
    _ = depth.add_argument("path")
    depth.set_defaults(handler=cmd_depth)

    verdict = commands.add_parser("verdict", help="hold a circuit against N")
    _ = verdict.add_argument("path")
    _add_limit_arguments(verdict)
    _ = verdict.add_argument(
        "--periods-per-gate",
        type=_positive_float,
        default=1.0,
        help="Rabi periods one gate uses (assumption, default 1)",
    )
    verdict.set_defaults(handler=cmd_verdict)

    requirement = commands.add_parser("requirement", help="nbar needed for chi")
    _ = requirement.add_argument("--chi", type=_count(0), required=True)
    _ = requirement.add_argument("--pth", type=_positive_threshold, required=True)
    _add_pulse_arguments(requirement, with_peak_power=False)
    requirement.set_defaults(handler=cmd_requirement)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command.

    :param argv: arguments without the program name (default sys.argv[1:])
    :return: exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        _ = sys.stderr.write(f"rabilimit: error: {e}\n")
        return EXIT_USAGE
    except CircuitParseError as e:
        _ = sys.stderr.write(f"rabilimit: parse error: {e}\n")
        return EXIT_PARSE
    except OSError as e:
        _ = sys.stderr.write(f"rabilimit: {e}\n")
        return EXIT_IO
    except PeakBracketError as e:
        _ = sys.stderr.write(f"rabilimit: error: {e} Try another --method.\n")
        return EXIT_USAGE
    except ValueError as e:
        _ = sys.stderr.write(f"rabilimit: error: {e}\n")
        return EXIT_USAGE
