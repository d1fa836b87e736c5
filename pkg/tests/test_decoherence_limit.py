"""Decoherence limit estimates, feasibility, and runtime.

:created: 2026-10-17
"""

from __future__ import annotations

import math
from types import SimpleNamespace
from typing import Any

import pytest

from rabilimit import decoherence_limit
from rabilimit.decoherence_limit import (
    ALTERNATIVE_FT_TOFFOLI_DEPTH,
    C4C6_TASK_CNOTS,
    C4C6_THRESHOLD,
    ORIGINAL_FT_TOFFOLI_DEPTH,
    TOFFOLI_DECOMPOSITION_DEPTH,
    TYPICAL_THRESHOLD,
    LimitEstimate,
    LimitMethod,
    PeakBracketError,
    all_estimates,
    exact_peak_amplitude,
    feasibility,
    limit_estimate,
    n_chi_closed_form,
    n_chi_cumulative,
    n_chi_per_period,
    nbar_required,
    runtime_estimate,
    threshold_from_exponent,
)
from rabilimit.envelope_model import envelope_loss, gauss_envelope, rabi_period
from tests.helpers.utils import closed_form_by_hand, literal_limit_by_hand

SHORT_PULSE_NBAR = 1.6667e8
LONG_PULSE_NBAR = 1.6667e11

NBAR_GRID = (1e2, 1e4, 1e6, SHORT_PULSE_NBAR, LONG_PULSE_NBAR)
P_TH_GRID = (1e-4, 1e-3, 1e-2)


class TestClosedForm:
    @pytest.mark.parametrize(
        ("nbar", "p_th", "expect"),
        [
            (SHORT_PULSE_NBAR, TYPICAL_THRESHOLD, 21.64),
            (LONG_PULSE_NBAR, TYPICAL_THRESHOLD, 216.4),
            (SHORT_PULSE_NBAR, C4C6_THRESHOLD, 100.4),
        ],
    )
    def test_values(self, nbar: float, p_th: float, expect: float) -> None:
        """Published magnitudes."""
        assert n_chi_closed_form(nbar, p_th) == pytest.approx(expect, abs=0.05)

    def test_below_one_hundred_and_one(self) -> None:
        """The 1e-2 threshold leaves the limit between 100 and 101."""
        assert 100 <= n_chi_closed_form(SHORT_PULSE_NBAR, C4C6_THRESHOLD) < 101

    def test_zero_threshold(self) -> None:
        """No error budget, no periods."""
        assert n_chi_closed_form(1e4, 0.0) == 0.0

    def test_matches_formula(self) -> None:
        """Agrees with the formula written out by hand."""
        assert n_chi_closed_form(3.3e5, 2e-3) == pytest.approx(
            closed_form_by_hand(3.3e5, 2e-3), rel=1e-14
        )

    def test_cube_root_in_nbar(self) -> None:
        """Ratio is the cube root of the (nbar + 1) ratio."""
        ratio = n_chi_closed_form(LONG_PULSE_NBAR, 1e-4) / n_chi_closed_form(
            SHORT_PULSE_NBAR, 1e-4
        )
        expect = ((LONG_PULSE_NBAR + 1) / (SHORT_PULSE_NBAR + 1)) ** (1 / 3)
        assert ratio == pytest.approx(expect, rel=1e-12)

    def test_cube_root_in_threshold(self) -> None:
        """100x the threshold gives 100^(1/3) x the limit."""
        ratio = n_chi_closed_form(1e6, 1e-2) / n_chi_closed_form(1e6, 1e-4)
        assert ratio == pytest.approx(100 ** (1 / 3), rel=1e-12)

    def test_bad_nbar(self) -> None:
        """nbar must be positive."""
        with pytest.raises(ValueError):
            _ = n_chi_closed_form(0.0, 1e-4)


class TestCumulative:
    @pytest.mark.parametrize(
        ("nbar", "p_th", "expect"),
        [
            (SHORT_PULSE_NBAR, 1e-4, 21),
            (SHORT_PULSE_NBAR, 1e-2, 99),
            (LONG_PULSE_NBAR, 1e-4, 215),
            (1e4, 1e-2, 3),
            (1e4, 1e-3, 1),
            (1e4, 1e-4, 0),
        ],
    )
    def test_literal(self, nbar: float, p_th: float, expect: int) -> None:
        """Sum of (i T)^2 / 2 until the threshold is passed."""
        assert n_chi_cumulative(nbar, p_th) == expect

    @pytest.mark.parametrize("nbar", NBAR_GRID)
    @pytest.mark.parametrize("p_th", P_TH_GRID)
    def test_literal_matches_plain_sum(self, nbar: float, p_th: float) -> None:
        """Compensated and plain partial sums land on the same count."""
        assert n_chi_cumulative(nbar, p_th) == literal_limit_by_hand(nbar, p_th)

    def test_literal_boundary_by_hand(self) -> None:
        """N = 21 fits, N = 22 does not."""
        period = rabi_period(SHORT_PULSE_NBAR)
        assert 21 * 22 * 43 * period**2 / 12 <= 1e-4
        assert 22 * 23 * 45 * period**2 / 12 > 1e-4

    def test_envelope(self) -> None:
        """Envelope loss is close to the literal loss at small tau."""
        assert n_chi_cumulative(SHORT_PULSE_NBAR, 1e-4, "envelope") == 21

    @pytest.mark.parametrize("loss_model", ["literal", "envelope", "exact"])
    def test_zero_threshold(self, loss_model: Any) -> None:
        """p_th = 0 allows no periods."""
        assert n_chi_cumulative(1e4, 0.0, loss_model) == 0

    @pytest.mark.parametrize("nbar", [1e4, SHORT_PULSE_NBAR, LONG_PULSE_NBAR])
    @pytest.mark.parametrize("p_th", [1e-4, 1e-2])
    def test_literal_near_closed_form(self, nbar: float, p_th: float) -> None:
        """The closed form C bounds the literal count: N <= C < N + 2."""
        count = n_chi_cumulative(nbar, p_th)
        closed = n_chi_closed_form(nbar, p_th)
        assert count <= closed < count + 2
        assert count in (math.floor(closed) - 1, math.floor(closed))

    def test_unknown_model(self) -> None:
        """Loss models are literal, envelope, or exact."""
        with pytest.raises(ValueError):
            _ = n_chi_cumulative(1e4, 1e-2, "quadratic")  # type: ignore[arg-type]

    @pytest.mark.parametrize("p_th", [-1e-3, 1.0])
    def test_bad_threshold(self, p_th: float) -> None:
        """p_th must be in [0, 1)."""
        with pytest.raises(ValueError):
            _ = n_chi_cumulative(1e4, p_th)


class TestPerPeriod:
    def test_value(self) -> None:
        """Each period alone may lose up to p_th."""
        assert n_chi_per_period(SHORT_PULSE_NBAR, 1e-4) == 58

    def test_zero_threshold(self) -> None:
        """p_th = 0 allows no periods."""
        assert n_chi_per_period(SHORT_PULSE_NBAR, 0.0) == 0

    def test_boundary(self) -> None:
        """Period 58 is within the threshold and period 59 is not."""
        period = rabi_period(SHORT_PULSE_NBAR)
        assert envelope_loss(58 * period, SHORT_PULSE_NBAR) <= 1e-4
        assert envelope_loss(59 * period, SHORT_PULSE_NBAR) > 1e-4

    @pytest.mark.parametrize("nbar", NBAR_GRID)
    @pytest.mark.parametrize("p_th", P_TH_GRID)
    def test_never_below_literal(self, nbar: float, p_th: float) -> None:
        """One term never exceeds the whole sum."""
        assert n_chi_per_period(nbar, p_th) >= n_chi_cumulative(nbar, p_th)


class TestExactPeak:
    def test_first_peak_near_envelope(self) -> None:
        """The first exact peak sits close to the envelope at T."""
        nbar = 1e4
        expect = gauss_envelope(rabi_period(nbar), nbar)
        assert exact_peak_amplitude(1, nbar) == pytest.approx(expect, abs=1e-3)

    def test_peak_at_most_one(self) -> None:
        """A weighted mean of cosines cannot exceed 1."""
        assert exact_peak_amplitude(3, 1e4) <= 1 + 1e-12

    @pytest.mark.parametrize(("p_th", "expect"), [(1e-3, 1), (1e-2, 3)])
    def test_exact_count(self, p_th: float, expect: int) -> None:
        """Exact-peak losses at nbar = 1e4."""
        assert n_chi_cumulative(1e4, p_th, "exact") == expect

    @pytest.mark.parametrize("p_th", [1e-3, 1e-2])
    def test_agrees_with_envelope(self, p_th: float) -> None:
        """Exact and envelope counts differ by at most one."""
        exact = n_chi_cumulative(1e4, p_th, "exact")
        envelope = n_chi_cumulative(1e4, p_th, "envelope")
        assert abs(exact - envelope) <= 1

    def test_bracket_edge(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """A search that ends on the bracket edge raises PeakBracketError."""
        period = rabi_period(1e4)

        def stuck_on_edge(*_: Any, **__: Any) -> SimpleNamespace:
            return SimpleNamespace(x=0.75 * period, fun=-0.5)

        monkeypatch.setattr(
            decoherence_limit.optimize, "minimize_scalar", stuck_on_edge
        )
        with pytest.raises(PeakBracketError):
            _ = exact_peak_amplitude(1, 1e4)


class TestMonotonic:
    @pytest.mark.parametrize("method", list(LimitMethod))
    def test_in_nbar(self, method: LimitMethod) -> None:
        """More photons never lower the limit."""
        grid = (1e2, 1e3, 1e4) if method is LimitMethod.EXACT_PEAK else NBAR_GRID
        values = [limit_estimate(nbar, 1e-2, method).value for nbar in grid]
        assert values == sorted(values)

    @pytest.mark.parametrize("method", list(LimitMethod))
    def test_in_threshold(self, method: LimitMethod) -> None:
        """A larger error budget never lowers the limit."""
        nbar = 1e4 if method is LimitMethod.EXACT_PEAK else SHORT_PULSE_NBAR
        values = [limit_estimate(nbar, p_th, method).value for p_th in P_TH_GRID]
        assert values == sorted(values)


class TestLimitEstimate:
    def test_dispatch_by_string(self) -> None:
        """Methods may be named by value."""
        estimate = limit_estimate(SHORT_PULSE_NBAR, 1e-4, "per_period")
        assert estimate.method is LimitMethod.PER_PERIOD
        assert estimate.value == 58

    def test_default_is_literal(self) -> None:
        """The cumulative literal sum is the default."""
        estimate = limit_estimate(SHORT_PULSE_NBAR, 1e-4)
        assert estimate.method is LimitMethod.CUMULATIVE_LITERAL
        assert estimate.periods == 21

    def test_all_estimates(self) -> None:
        """One estimate per cheap method, in order."""
        estimates = all_estimates(SHORT_PULSE_NBAR, 1e-4)
        assert [x.method for x in estimates] == [
            LimitMethod.CLOSED_FORM,
            LimitMethod.CUMULATIVE_LITERAL,
            LimitMethod.CUMULATIVE_ENVELOPE,
            LimitMethod.PER_PERIOD,
        ]
        assert [x.periods for x in estimates] == [21, 21, 21, 58]

    def test_integer_methods_reject_fractions(self) -> None:
        """Only the closed form may be fractional."""
        with pytest.raises(ValueError):
            _ = LimitEstimate(LimitMethod.CUMULATIVE_LITERAL, 2.5, 1e4, 1e-2)
        with pytest.raises(ValueError):
            _ = LimitEstimate(LimitMethod.PER_PERIOD, -1, 1e4, 1e-2)

    def test_unknown_method(self) -> None:
        """Unknown method names are rejected."""
        with pytest.raises(ValueError):
            _ = limit_estimate(1e4, 1e-2, "median")


class TestFeasibility:
    def test_toffoli_decomposition(self) -> None:
        """Ten gates on the target fit inside 21 periods."""
        report = feasibility(TOFFOLI_DECOMPOSITION_DEPTH, SHORT_PULSE_NBAR, 1e-4)
        assert report.feasible
        assert report.margin == 11

    def test_fault_tolerant_toffoli(self) -> None:
        """One fault-tolerant Toffoli fits, closed form."""
        report = feasibility(
            ORIGINAL_FT_TOFFOLI_DEPTH, SHORT_PULSE_NBAR, 1e-4, "closed_form"
        )
        assert report.feasible
        assert report.margin == 7

    def test_double_fault_tolerant_toffoli(self) -> None:
        """Two fault-tolerant Toffolis in one period do not fit."""
        report = feasibility(
            2 * ORIGINAL_FT_TOFFOLI_DEPTH, SHORT_PULSE_NBAR, 1e-4, "closed_form"
        )
        assert not report.feasible
        assert report.margin == -7

    def test_alternative_toffoli(self) -> None:
        """The alternative construction also fits once but not twice."""
        once = feasibility(ALTERNATIVE_FT_TOFFOLI_DEPTH, SHORT_PULSE_NBAR, 1e-4)
        twice = feasibility(2 * ALTERNATIVE_FT_TOFFOLI_DEPTH, SHORT_PULSE_NBAR, 1e-4)
        assert once.feasible
        assert not twice.feasible

    @pytest.mark.parametrize("chi", [0, 1, 20, 21, 22, 30])
    def test_verdict_matches_floor(self, chi: int) -> None:
        """feasible iff chi <= floor of the limit."""
        report = feasibility(chi, SHORT_PULSE_NBAR, 1e-4)
        assert report.feasible is (chi <= 21)
        assert report.margin == 21 - chi

    def test_periods_per_gate(self) -> None:
        """Half-period gates double the depth that fits."""
        report = feasibility(30, SHORT_PULSE_NBAR, 1e-4, periods_per_gate=0.5)
        assert report.required_periods == 15
        assert report.feasible
        assert report.margin == 6

    @pytest.mark.parametrize(("chi", "ppg"), [(-1, 1.0), (5, 0.0)])
    def test_bad_arguments(self, chi: int, ppg: float) -> None:
        """chi >= 0 and periods_per_gate > 0."""
        with pytest.raises(ValueError):
            _ = feasibility(chi, 1e4, 1e-2, periods_per_gate=ppg)


class TestRequirementAndRuntime:
    @pytest.mark.parametrize("chi", [1, 10, 14, 28, 100])
    def test_nbar_required_inverts_closed_form(self, chi: int) -> None:
        """The closed form at the required nbar returns chi."""
        nbar = nbar_required(chi, 1e-4)
        assert n_chi_closed_form(nbar, 1e-4) == pytest.approx(chi, rel=1e-12)

    def test_nbar_required_zero(self) -> None:
        """Depth 0 needs no photons."""
        assert nbar_required(0, 1e-4) == 0.0

    def test_nbar_required_bad_threshold(self) -> None:
        """p_th must be positive."""
        with pytest.raises(ValueError):
            _ = nbar_required(10, 0.0)

    def test_threshold_from_exponent(self) -> None:
        """p_th = 10^-k."""
        assert threshold_from_exponent(4) == pytest.approx(TYPICAL_THRESHOLD, rel=1e-15)
        assert threshold_from_exponent(2) == pytest.approx(C4C6_THRESHOLD, rel=1e-15)

    @pytest.mark.parametrize(
        ("args", "expect"),
        [
            ((C4C6_TASK_CNOTS, 1e6, 1.0), 2e11),
            ((C4C6_TASK_CNOTS, 1e6, 200.0), 1e9),
            ((1e6, 1e6, 1.0), 1.0),
        ],
    )
    def test_runtime(self, args: tuple[float, float, float], expect: float) -> None:
        """gate_count / (gate_rate * parallelism)."""
        assert runtime_estimate(*args) == pytest.approx(expect)

    def test_runtime_bad_parallelism(self) -> None:
        """Parallelism below 1 is rejected."""
        with pytest.raises(ValueError):
            _ = runtime_estimate(1e6, 1e6, 0.5)
