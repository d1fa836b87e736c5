"""Collect parsed instructions into error-correction periods.

:created: 2026-10-17

::

    [  # circuit
        [  # period
            Instruction,  # gate on one or more qubits
            ...
        ],
        ...
    ]

The parser reads a netlist one line at a time. Each ``gate`` line drops an
instruction into the open period; each ``period`` line closes it and opens the next.
Qubit names are remembered in the order they first appear, whether in a ``qubits``
declaration or in a gate.

Shorthand for this package. Instances of this class should not escape the package.
Pass out of package with ``period_collector_instance.periods``.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:
    from rabilimit.circuit_depth import Instruction


class PeriodCollector:
    """Insert instructions into the rightmost open period."""

    def __init__(self) -> None:
        """Start with one open, empty period and no qubits."""
        self._periods: list[list[Instruction]] = [[]]
        self._qubits: dict[str, None] = {}

    def declare_qubits(self, names: Iterable[str]) -> None:
        """Add qubit names without adding instructions.

        :param names: qubit names. Repeats are ignored.
        """
        for name in names:
            self._qubits.setdefault(name, None)

    def insert_instruction(self, instruction: Instruction) -> None:
        """Add an instruction to the open period.

        :param instruction: Instruction instance
        """
        self.declare_qubits(instruction.qubits)
        self._periods[-1].append(instruction)

    def conclude_period(self) -> None:
        """Close the open period and open a new, empty one."""
        self._periods.append([])

    @property
    def qubit_names(self) -> tuple[str, ...]:
        """Qubit names in first-seen order.

        :return: every qubit declared or used so far
        """
        return tuple(self._qubits)

    @property
    def periods(self) -> tuple[tuple[Instruction, ...], ...]:
        """All collected periods, including the open one.

        :return: instructions grouped by period
        """
        return tuple(tuple(x) for x in self._periods)
