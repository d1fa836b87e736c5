"""Parse a circuit netlist and find its depth of logical operation.

:created: 2026-10-17

A circuit is a list of gates on named qubits, split into error-correction periods.
The depth of logical operation is::

    chi = max over qubits q and periods p of x(q, p)

where ``x(q, p)`` counts the instructions in period ``p`` that touch ``q``. A gate
counts once for every qubit it touches, control or target alike. Gate names carry no
meaning here; a measurement written as an instruction counts like any gate.

Netlist format (UTF-8, one statement per line)::

    # comment to end of line
    qubits c1 c2 t          # optional, repeatable
    gate h t                # one instruction: gate name, then one or more qubits
    gate cx c2 t
    period                  # error-correction period boundary

Tokens are separated by whitespace. Qubit names match ``[A-Za-z0-9_]+``. Gate names
are any token and are case-insensitive (stored lower case).
"""

from __future__ import annotations

import dataclasses
import re
from pathlib import Path
from typing import TYPE_CHECKING, Iterator, Mapping

from rabilimit.period_collector import PeriodCollector

if TYPE_CHECKING:
    import os

QUBIT_NAME = re.compile(r"[A-Za-z0-9_]+")


class CircuitParseError(ValueError):
    """A netlist line could not be read."""

    def __init__(self, line_number: int, message: str) -> None:
        """Store the line number with the message.

        :param line_number: 1-based line of the netlist
        :param message: what went wrong
        """
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


@dataclasses.dataclass(frozen=True)
class Instruction:
    """One gate applied to one or more distinct qubits.

    :param gate_name: gate token, lower case
    :param qubits: qubit names in the order written
    """

    gate_name: str
    qubits: tuple[str, ...]

    def __post_init__(self) -> None:
        """Enforce at least one qubit and no repeats.

        :raise ValueError: if qubits is empty or repeats a name
        """
        if not self.qubits:
            msg = f"gate {self.gate_name} names no qubits"
            raise ValueError(msg)
        if len(set(self.qubits)) != len(self.qubits):
            msg = f"gate {self.gate_name} repeats a qubit: {' '.join(self.qubits)}"
            raise ValueError(msg)


@dataclasses.dataclass(frozen=True)
class Circuit:
    """Instructions on named qubits, grouped into error-correction periods.

    :param qubit_names: every qubit, in first-seen order
    :param periods: one tuple of instructions per period (at least one period)
    """

    qubit_names: tuple[str, ...]
    periods: tuple[tuple[Instruction, ...], ...] = ((),)

    def __post_init__(self) -> None:
        """Check that instructions only use known qubits.

        :raise ValueError: if there are no periods or a qubit is undeclared
        """
        if not self.periods:
            msg = "a circuit has at least one (possibly empty) period"
            raise ValueError(msg)
        known = set(self.qubit_names)
        for instruction in self.instructions:
            unknown = [q for q in instruction.qubits if q not in known]
            if unknown:
                msg = f"instruction uses undeclared qubits {unknown}"
                raise ValueError(msg)

    @property
    def instructions(self) -> Iterator[Instruction]:
        """Every instruction in every period, in order.

        :return: iterator over instructions
        """
        for period in self.periods:
            yield from period

    @property
    def instruction_count(self) -> int:
        """Total instructions across all periods.

        :return: number of instructions
        """
        return sum(len(x) for x in self.periods)

    def relabeled(self, mapping: Mapping[str, str]) -> Circuit:
        """Rename qubits.

        :param mapping: old name -> new name. Unmapped names are kept.
        :return: a new Circuit with qubits renamed
        """

        def rename(name: str) -> str:
            return mapping.get(name, name)

        periods = tuple(
            tuple(Instruction(x.gate_name, tuple(map(rename, x.qubits))) for x in p)
            for p in self.periods
        )
        return Circuit(tuple(map(rename, self.qubit_names)), periods)


@dataclasses.dataclass(frozen=True)
class DepthReport:
    """Per-qubit instruction counts and chi.

    :param per_period_per_qubit: for each period, qubit name -> instructions
        touching that qubit (every qubit listed, zeros included)
    :param chi: largest count in the table, 0 for an empty circuit
    :param argmax: (period index, qubit name) where chi is reached, the lowest
        period and then the alphabetically first qubit on ties. None if chi is 0.
    """

    per_period_per_qubit: tuple[dict[str, int], ...]
    chi: int
    argmax: tuple[int, str] | None

    def qubit_count(self, qubit: str, period: int = 0) -> int:
        """Instructions touching one qubit in one period.

        :param qubit: qubit name
        :param period: period index
        :return: count from the table
        """
        return self.per_period_per_qubit[period][qubit]


def _parse_statement(tokens: list[str], collector: PeriodCollector) -> None:
    """Feed one tokenized, non-empty line to the collector.

    :param tokens: whitespace-separated tokens, comment removed
    :param collector: PeriodCollector receiving the statement
    :raise ValueError: if the statement is malformed
    """
    directive, *args = tokens
    bad_names = [x for x in args if directive != "gate" and not QUBIT_NAME.fullmatch(x)]
    if directive == "period":
        if args:
            msg = f"'period' takes no arguments, got {' '.join(args)}"
            raise ValueError(msg)
        collector.conclude_period()
    elif directive == "qubits":
        if not args or bad_names:
            msg = f"'qubits' needs one or more valid qubit names, got {args}"
            raise ValueError(msg)
        collector.declare_qubits(args)
    elif directive == "gate":
        if len(args) < 2:
            msg = "'gate' needs a gate name and at least one qubit"
            raise ValueError(msg)
        gate_name, *qubits = args
        bad_qubits = [x for x in qubits if not QUBIT_NAME.fullmatch(x)]
        if bad_qubits:
            msg = f"invalid qubit names {bad_qubits}"
            raise ValueError(msg)
        collector.insert_instruction(Instruction(gate_name.lower(), tuple(qubits)))
    else:
        msg = f"unknown directive '{directive}'"
        raise ValueError(msg)


def parse_circuit(text: str) -> Circuit:
    """Read a circuit from netlist text.

    :param text: netlist in the format described in this module's docstring
    :return: Circuit
    :raise CircuitParseError: with the 1-based line number of the first bad line
    """
    collector = PeriodCollector()
    for line_number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        try:
            _parse_statement(tokens, collector)
        except ValueError as e:
            raise CircuitParseError(line_number, str(e)) from e
    return Circuit(collector.qubit_names, collector.periods)


def read_circuit(path: str | os.PathLike[str]) -> Circuit:
    """Read a circuit from a UTF-8 netlist file.

    :param path: path to the netlist
    :return: Circuit
    :raise CircuitParseError: if a line is malformed or not valid UTF-8
    :raise OSError: if the file cannot be read
    """
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_number = data.count(b"\n", 0, e.start) + 1
        raise CircuitParseError(line_number, f"not valid UTF-8 ({e.reason})") from e
    return parse_circuit(text)


def serialize_circuit(circuit: Circuit) -> str:
    """Write a circuit as netlist text.

    :param circuit: Circuit instance
    :return: netlist text that parse_circuit reads back to an equal Circuit
    """
    lines: list[str] = []
    if circuit.qubit_names:
        lines.append(" ".join(["qubits", *circuit.qubit_names]))
    for i, period in enumerate(circuit.periods):
        if i:
            lines.append("period")
        lines.extend(" ".join(["gate", x.gate_name, *x.qubits]) for x in period)
    return "\n".join(lines) + "\n" if lines else ""


def logical_depth(circuit: Circuit) -> DepthReport:
    """Count instructions per qubit per period and take the maximum.

    :param circuit: Circuit instance
    :return: DepthReport with the full table, chi, and where chi is reached
    """
    table: list[dict[str, int]] = []
    for period in circuit.periods:
        counts = dict.fromkeys(circuit.qubit_names, 0)
        for instruction in period:
            for qubit in instruction.qubits:
                counts[qubit] += 1
        table.append(counts)

    chi = 0
    argmax: tuple[int, str] | None = None
    for period_index, counts in enumerate(table):
        for qubit in sorted(counts):
            if counts[qubit] > chi:
                chi = counts[qubit]
                argmax = (period_index, qubit)
    return DepthReport(tuple(table), chi, argmax)
