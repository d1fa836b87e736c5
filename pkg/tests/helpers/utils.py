"""Helper functions for tests.

:created: 2026-10-17
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from scipy import stats

from rabilimit.envelope_model import rabi_period


def circuit_text(*periods: Sequence[str], qubits: Iterable[str] = ()) -> str:
    """Build netlist text from per-period gate lines.

    :param periods: each period is a sequence like ``["cx a b", "h c"]``
    :param qubits: optional qubit names to declare first
    :return: netlist text
    """
    lines: list[str] = []
    declared = list(qubits)
    if declared:
        lines.append(" ".join(["qubits", *declared]))
    for i, period in enumerate(periods):
        if i:
            lines.append("period")
        lines.extend(f"gate {x}" for x in period)
    return "\n".join(lines) + "\n"


def repeat_in_one_period(text: str, times: int) -> str:
    """Concatenate a one-period netlist with itself without a period break.

    :param text: netlist text with no ``period`` lines
    :param times: copies
    :return: netlist text
    """
    return text * times


def literal_limit_by_hand(nbar: float, p_th: float) -> int:
    """Largest N with sum_{i<=N} (i T)^2 / 2 <= p_th, by plain float sums.

    :param nbar: mean photon number
    :param p_th: gate-error threshold
    :return: N
    """
    period = rabi_period(nbar)
    total = 0.0
    count = 0
    while True:
        total += 0.5 * ((count + 1) * period) ** 2
        if total > p_th:
            return count
        count += 1


def poisson_tail_mass(n_min: int, n_max: int, nbar: float) -> float:
    """Poisson mass outside [n_min, n_max], straight from scipy.

    :param n_min: first photon number kept
    :param n_max: last photon number kept
    :param nbar: mean photon number
    :return: tail mass
    """
    lower = stats.poisson.cdf(n_min - 1, nbar) if n_min > 0 else 0.0
    return float(lower + stats.poisson.sf(n_max, nbar))


def closed_form_by_hand(nbar: float, p_th: float) -> float:
    """(6 (nbar + 1) p_th / pi^2) ** (1/3), written out again.

    :param nbar: mean photon number
    :param p_th: gate-error threshold
    :return: closed-form limit
    """
    return math.pow(6.0 * (nbar + 1.0) * p_th / (math.pi * math.pi), 1.0 / 3.0)
