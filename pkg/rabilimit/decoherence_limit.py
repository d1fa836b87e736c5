"""How many Rabi periods a qubit gets before the collapse eats the error budget.

:created: 2026-10-17

Each gate on a qubit uses (at most) one Rabi period. The oscillation amplitude decays
under the collapse envelope, and every period gives up a little of it. Those losses
add up, and once the sum exceeds the gate-error threshold ``p_th`` the following
periods can no longer be trusted. The count of trustworthy periods is the
decoherence limit ``N``. A circuit whose busiest qubit needs more than ``N`` gates in
one error-correction period (its depth of logical operation, chi) cannot run
reliably.

Five estimates of ``N``, each a ``LimitMethod``:

* ``closed_form`` -- cube root of ``6 (nbar + 1) p_th / pi^2``. Real-valued.
* ``cumulative_literal`` -- largest N with sum_i (i T)^2 / 2 <= p_th, where T is
  the Rabi period in tau. The default.
* ``cumulative_envelope`` -- same sum with losses 1 - gauss_envelope(i T).
* ``exact_peak`` -- same sum with losses 1 - (local peak of exact W near i T).
* ``per_period`` -- largest N whose own envelope loss is <= p_th. Looser; ignores
  accumulation.

Peaks sit at full-period marks ``tau_i = i T``. Integer counts come from adding
losses one period at a time, never from inverting the cubic, so a value that sits
on a boundary lands on the side the sum puts it.

``cumulative_literal`` and ``closed_form`` C satisfy ``N <= C < N + 2``.
"""

from __future__ import annotations

import dataclasses
import itertools as it
import math
from enum import Enum
from typing import Callable, Literal

from paragraphs import par
from scipy import optimize

from rabilimit.envelope_model import envelope_loss, rabi_period
from rabilimit.poisson_weights import DEFAULT_TAIL_TOL, window_arrays
from rabilimit.rabi_series import partial_rabi_sum

# reference depths and thresholds
TOFFOLI_DECOMPOSITION_DEPTH = 10
ORIGINAL_FT_TOFFOLI_DEPTH = 14
ALTERNATIVE_FT_TOFFOLI_DEPTH = 12
TYPICAL_THRESHOLD = 1e-4
C4C6_THRESHOLD = 1e-2
C4C6_TASK_CNOTS = 2e17

# exact-peak searches run on [i T - T/4, i T + T/4]
_PEAK_HALF_WIDTH = 0.25
_PEAK_XATOL = 1e-10
_PEAK_EDGE_TOL = 1e-3

LossModel = Literal["literal", "envelope", "exact"]


class LimitMethod(str, Enum):
    """Ways to estimate the decoherence limit."""

    CLOSED_FORM = "closed_form"
    CUMULATIVE_LITERAL = "cumulative_literal"
    CUMULATIVE_ENVELOPE = "cumulative_envelope"
    EXACT_PEAK = "exact_peak"
    PER_PERIOD = "per_period"


_CUMULATIVE_MODELS: dict[LimitMethod, LossModel] = {
    LimitMethod.CUMULATIVE_LITERAL: "literal",
    LimitMethod.CUMULATIVE_ENVELOPE: "envelope",
    LimitMethod.EXACT_PEAK: "exact",
}


class PeakBracketError(RuntimeError):
    """The exact-peak search found no maximum inside its bracket."""


@dataclasses.dataclass(frozen=True)
class LimitEstimate:
    """One estimate of the decoherence limit.

    :param method: how value was computed
    :param value: real for closed_form, non-negative integer otherwise
    :param nbar: mean photon number used
    :param p_th: gate-error threshold used
    """

    method: LimitMethod
    value: float
    nbar: float
    p_th: float

    def __post_init__(self) -> None:
        """Integer methods must give non-negative integers.

        :raise ValueError: if an integer method holds a negative or fractional value
        """
        if self.method is LimitMethod.CLOSED_FORM:
            return
        if self.value < 0 or self.value != int(self.value):
            msg = f"{self.method.value} needs a non-negative integer, got {self.value}"
            raise ValueError(msg)

    @property
    def periods(self) -> int:
        """Whole periods available.

        :return: floor of value
        """
        return math.floor(self.value)


@dataclasses.dataclass(frozen=True)
class FeasibilityReport:
    """Does a circuit of depth chi fit inside the decoherence limit?

    :param chi: depth of logical operation of the circuit
    :param limit: the estimate chi was held against
    :param feasible: required_periods <= limit.periods
    :param margin: limit.periods - required_periods (negative when infeasible)
    :param periods_per_gate: Rabi periods one gate is assumed to use
    """

    chi: int
    limit: LimitEstimate
    feasible: bool
    margin: int
    periods_per_gate: float = 1.0

    @property
    def required_periods(self) -> int:
        """Rabi periods the busiest qubit needs.

        :return: ceil(chi * periods_per_gate)
        """
        return math.ceil(self.chi * self.periods_per_gate)


class _KahanSum:
    """Running sum that carries its own rounding error forward."""

    def __init__(self) -> None:
        """Start at zero."""
        self.total = 0.0
        self._carry = 0.0

    def add(self, value: float) -> float:
        """Add a value.

        :param value: next term
        :return: the updated total
        """
        value += self._carry
        previous = self.total
        self.total += value
        self._carry = value - (self.total - previous)
        return self.total


def _validate(nbar: float, p_th: float, *, allow_one: bool = False) -> None:
    """Check a photon number and threshold.

    :param nbar: mean photon number, must be > 0
    :param p_th: threshold, must be in [0, 1) (or [0, inf) with allow_one)
    :param allow_one: accept any non-negative p_th
    :raise ValueError: if either is out of range
    """
    if not 0 < nbar < math.inf:
        msg = f"nbar must be a finite positive number, got {nbar!r}"
        raise ValueError(msg)
    upper = math.inf if allow_one else 1.0
    if not 0 <= p_th < upper:
        msg = f"p_th must be in [0, {upper}), got {p_th!r}"
        raise ValueError(msg)


def threshold_from_exponent(k: float) -> float:
    """Gate-error threshold written as a power of ten.

    :param k: exponent
    :return: 10 ** -k
    """
    return 10.0**-k


def n_chi_closed_form(nbar: float, p_th: float) -> float:
    """Closed-form decoherence limit.

    :param nbar: mean photon number (> 0)
    :param p_th: gate-error threshold (>= 0)
    :return: (6 (nbar + 1) p_th / pi^2) ** (1/3)

        >>> round(n_chi_closed_form(1.6667e8, 1e-4), 2)
        21.64
    """
    _validate(nbar, p_th, allow_one=True)
    return (6 * (nbar + 1) * p_th / math.pi**2) ** (1 / 3)


def exact_peak_amplitude(
    index: int, nbar: float, tail_tol: float = DEFAULT_TAIL_TOL
) -> float:
    """Height of the exact W peak nearest the i-th full-period mark.

    :param index: period number i (>= 1)
    :param nbar: mean photon number (> 0)
    :param tail_tol: Poisson mass allowed outside the summation window
    :return: local maximum of W on [i T - T/4, i T + T/4]
    :raise PeakBracketError: if the maximum sits on the bracket edge

    Bounded Brent search. The bracket is a half period wide so that only the
    cos = +1 crest, not the neighbouring cos = -1 troughs, can be found.
    """
    period = rabi_period(nbar)
    center = index * period
    lo = center - _PEAK_HALF_WIDTH * period
    hi = center + _PEAK_HALF_WIDTH * period
    _, frequencies, weights = window_arrays(nbar, tail_tol)

    def negative_w(tau: float) -> float:
        """Objective for the minimizer.

        :param tau: candidate peak position
        :return: -W(tau)
        """
        return -partial_rabi_sum(tau, frequencies, weights)

    result = optimize.minimize_scalar(
        negative_w,
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": _PEAK_XATOL * period},
    )
    tau_peak = float(result.x)
    edge = _PEAK_EDGE_TOL * period
    if tau_peak - lo < edge or hi - tau_peak < edge:
        msg = par(
            f"""No interior maximum of W near period {index} (nbar={nbar}): search
            ended at tau={tau_peak}, on the edge of [{lo}, {hi}]."""
        )
        raise PeakBracketError(msg)
    return -float(result.fun)


def _loss_function(
    nbar: float, loss_model: LossModel, tail_tol: float
) -> Callable[[int], float]:
    """Amplitude lost in period i under one loss model.

    :param nbar: mean photon number
    :param loss_model: literal, envelope, or exact
    :param tail_tol: Poisson mass allowed outside the summation window (exact only)
    :return: function of the period number i >= 1
    :raise ValueError: if loss_model is unknown
    """
    period = rabi_period(nbar)
    if loss_model == "literal":
        return lambda i: 0.5 * (i * period) ** 2
    if loss_model == "envelope":
        return lambda i: envelope_loss(i * period, nbar)
    if loss_model == "exact":
        return lambda i: 1 - exact_peak_amplitude(i, nbar, tail_tol)
    msg = f"unknown loss model {loss_model!r}"
    raise ValueError(msg)


def n_chi_cumulative(
    nbar: float,
    p_th: float,
    loss_model: LossModel = "literal",
    *,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> int:
    """Largest N whose accumulated per-period losses stay within p_th.

    :param nbar: mean photon number (> 0)
    :param p_th: gate-error threshold in [0, 1)
    :param loss_model: ``literal`` (tau_i^2 / 2), ``envelope``
        (1 - gauss_envelope), or ``exact`` (1 - exact peak of W)
    :param tail_tol: Poisson mass allowed outside the summation window (exact only)
    :return: largest N with sum of the first N losses <= p_th
    :raise PeakBracketError: from the exact model, if a peak cannot be bracketed
    """
    _validate(nbar, p_th)
    if p_th == 0:
        return 0
    loss = _loss_function(nbar, loss_model, tail_tol)
    accumulated = _KahanSum()
    for index in it.count(1):
        if accumulated.add(loss(index)) > p_th:
            return index - 1
    raise AssertionError  # pragma: no cover


def n_chi_per_period(nbar: float, p_th: float) -> int:
    """Largest N whose single-period envelope loss is within p_th.

    :param nbar: mean photon number (> 0)
    :param p_th: gate-error threshold in [0, 1)
    :return: largest N with 1 - gauss_envelope(N T) <= p_th

    This reads the threshold as a bound on each period's amplitude, not on their
    sum, so it is never smaller than the cumulative literal count.
    """
    _validate(nbar, p_th)
    if p_th == 0:
        return 0
    period = rabi_period(nbar)
    count = 0
    while envelope_loss((count + 1) * period, nbar) <= p_th:
        count += 1
    return count


def limit_estimate(
    nbar: float,
    p_th: float,
    method: LimitMethod | str = LimitMethod.CUMULATIVE_LITERAL,
    *,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> LimitEstimate:
    """Estimate the decoherence limit with one method.

    :param nbar: mean photon number (> 0)
    :param p_th: gate-error threshold in [0, 1)
    :param method: a LimitMethod or its string value
    :param tail_tol: Poisson mass allowed outside the summation window (exact only)
    :return: LimitEstimate
    """
    method = LimitMethod(method)
    value: float
    if method is LimitMethod.CLOSED_FORM:
        value = n_chi_closed_form(nbar, p_th)
    elif method is LimitMethod.PER_PERIOD:
        value = n_chi_per_period(nbar, p_th)
    else:
        value = n_chi_cumulative(
            nbar, p_th, _CUMULATIVE_MODELS[method], tail_tol=tail_tol
        )
    return LimitEstimate(method, value, nbar, p_th)


def all_estimates(
    nbar: float,
    p_th: float,
    methods: tuple[LimitMethod | str, ...] = (
        LimitMethod.CLOSED_FORM,
        LimitMethod.CUMULATIVE_LITERAL,
        LimitMethod.CUMULATIVE_ENVELOPE,
        LimitMethod.PER_PERIOD,
    ),
    *,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> list[LimitEstimate]:
    """Estimate the decoherence limit with several methods.

    :param nbar: mean photon number (> 0)
    :param p_th: gate-error threshold in [0, 1)
    :param methods: methods to run, in output order. exact_peak is left out by
        default because it evaluates the full series at every peak.
    :param tail_tol: Poisson mass allowed outside the summation window (exact only)
    :return: one LimitEstimate per method
    """
    return [limit_estimate(nbar, p_th, m, tail_tol=tail_tol) for m in methods]


def feasibility(
    chi: int,
    nbar: float,
    p_th: float,
    method: LimitMethod | str = LimitMethod.CUMULATIVE_LITERAL,
    *,
    periods_per_gate: float = 1.0,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> FeasibilityReport:
    """Hold a circuit depth against the decoherence limit.

    :param chi: depth of logical operation (>= 0)
    :param nbar: mean photon number (> 0)
    :param p_th: gate-error threshold in [0, 1)
    :param method: how to estimate the limit
    :param periods_per_gate: Rabi periods one gate uses. 1 is the conservative
        default; a half- or quarter-period gate would be 0.5 or 0.25.
    :param tail_tol: Poisson mass allowed outside the summation window (exact only)
    :return: FeasibilityReport
    :raise ValueError: if chi is negative or periods_per_gate is not positive
    """
    if chi < 0:
        msg = f"chi must be >= 0, got {chi}"
        raise ValueError(msg)
    if not 0 < periods_per_gate < math.inf:
        msg = f"periods_per_gate must be positive, got {periods_per_gate!r}"
        raise ValueError(msg)
    limit = limit_estimate(nbar, p_th, method, tail_tol=tail_tol)
    required = math.ceil(chi * periods_per_gate)
    margin = limit.periods - required
    return FeasibilityReport(chi, limit, margin >= 0, margin, periods_per_gate)


def nbar_required(chi: int, p_th: float) -> float:
    """Smallest nbar whose closed-form limit reaches chi.

    :param chi: target depth of logical operation (>= 0)
    :param p_th: gate-error threshold (> 0)
    :return: pi^2 chi^3 / (6 p_th) - 1, clamped at 0
    :raise ValueError: if p_th is not positive or chi is negative
    """
    if not p_th > 0:
        msg = f"p_th must be positive, got {p_th!r}"
        raise ValueError(msg)
    if chi < 0:
        msg = f"chi must be >= 0, got {chi}"
        raise ValueError(msg)
    return max(0.0, math.pi**2 * chi**3 / (6 * p_th) - 1)


def runtime_estimate(
    gate_count: float, gate_rate: float, parallelism: float = 1.0
) -> float:
    """Wall-clock time to run a number of gates.

    :param gate_count: physical gates to run (> 0)
    :param gate_rate: gates per second on one unit (> 0)
    :param parallelism: gates running side by side (>= 1)
    :return: gate_count / (gate_rate * parallelism), in seconds

        >>> runtime_estimate(2e17, 1e6, 200)
        1000000000.0
    """
    if not gate_count > 0 or not gate_rate > 0:
        msg = "gate_count and gate_rate must be positive"
        raise ValueError(msg)
    if not parallelism >= 1:
        msg = f"parallelism must be >= 1, got {parallelism!r}"
        raise ValueError(msg)
    return gate_count / (gate_rate * parallelism)
