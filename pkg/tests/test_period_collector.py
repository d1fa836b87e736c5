"""Collect instructions into periods.

:created: 2026-10-17
"""

from rabilimit.circuit_depth import Instruction
from rabilimit.period_collector import PeriodCollector


class TestPeriodCollector:
    def test_starts_with_one_empty_period(self) -> None:
        """A new collector holds one open, empty period."""
        collector = PeriodCollector()
        assert collector.periods == ((),)
        assert collector.qubit_names == ()

    def test_insert_and_conclude(self) -> None:
        """Instructions go to the open period; conclude opens the next."""
        collector = PeriodCollector()
        first = Instruction("h", ("a",))
        second = Instruction("cx", ("b", "a"))
        collector.insert_instruction(first)
        collector.conclude_period()
        collector.insert_instruction(second)
        assert collector.periods == ((first,), (second,))
        assert collector.qubit_names == ("a", "b")

    def test_declare_ignores_repeats(self) -> None:
        """Qubit names keep first-seen order."""
        collector = PeriodCollector()
        collector.declare_qubits(["q2", "q1", "q2"])
        collector.insert_instruction(Instruction("x", ("q1", "q3")))
        assert collector.qubit_names == ("q2", "q1", "q3")
