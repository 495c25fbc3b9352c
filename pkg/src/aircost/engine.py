"""Yearly purification-cost model.

The figure of merit is a normalized cost per year:

    total = (initial/lifetime + maintenance/yr + electricity/yr)
            * (reference_area / optimal_coverage)

with optimal_coverage = CADR * 3/2 (the appliance-industry 2/3 room-size
guideline inverted; the CFM-to-square-feet unit convention is adopted from
the source data as-is) and electricity/yr = days * (W/1000) * rate * 24.

All functions are pure; no shared mutable state.
"""

from __future__ import annotations

from dataclasses import dataclass

from aircost.catalog import (
    AnnualizedFilterPlan,
    AqiCalendar,
    CostModelParams,
    DailyAqiSeries,
    DEFAULT_PARAMS,
    FilterPlan,
    InitialCostMode,
    PeriodicFilterPlan,
    PurifierSpec,
)
from aircost.errors import DomainError

# Calendars may cover a leap year, so one day more than the 365 the cost
# formulas nominally assume is accepted.
MAX_OPERATING_DAYS = 366.0


@dataclass(frozen=True)
class CostContext:
    """Scenario parameters: local tariff, operating days per year, model params."""

    rate_usd_per_kwh: float
    t_operate_days: float
    params: CostModelParams = DEFAULT_PARAMS

    def __post_init__(self) -> None:
        if not self.rate_usd_per_kwh > 0:
            raise DomainError("rate_usd_per_kwh must be positive")
        if not 0 <= self.t_operate_days <= MAX_OPERATING_DAYS:
            raise DomainError(
                f"t_operate_days must be in 0..{MAX_OPERATING_DAYS:.0f}, "
                f"got {self.t_operate_days}"
            )


@dataclass(frozen=True)
class PcyResult:
    """Total normalized cost per year plus its per-component pieces.

    Invariant: total = (initial + maintenance + electricity) * multiplier,
    exactly, before any presentation rounding.
    """

    total_usd_per_year: float
    initial_component_usd: float
    maintenance_usd_per_year: float
    electricity_usd_per_year: float
    optimal_coverage_sqft: float
    normalization_multiplier: float


@dataclass(frozen=True)
class BreakdownShares:
    """Fractions of the three-component cost sum; always sum to 1."""

    initial: float
    maintenance: float
    electricity: float


def optimal_coverage(cadr_cfm: float, params: CostModelParams = DEFAULT_PARAMS) -> float:
    """Coverage area credited to a unit: CADR * 3/2."""
    if not cadr_cfm > 0:
        raise DomainError(f"cadr_cfm must be positive, got {cadr_cfm}")
    return cadr_cfm * params.coverage_factor


def min_cadr_for_room(room_area_sqft: float) -> float:
    """Minimum recommended CADR for a room: 2/3 of its area."""
    if not room_area_sqft > 0:
        raise DomainError(f"room_area_sqft must be positive, got {room_area_sqft}")
    return room_area_sqft * 2 / 3


def electricity_cost_per_year(ctx: CostContext, watts: float) -> float:
    """Electricity cost of running the unit: days * (W/1000) * rate * hours."""
    if not watts > 0:
        raise DomainError(f"watts must be positive, got {watts}")
    return (
        ctx.t_operate_days
        * (watts / 1000.0)
        * ctx.rate_usd_per_kwh
        * ctx.params.hours_per_day
    )


def maintenance_cost_per_year(ctx: CostContext, plan: FilterPlan) -> float:
    """Filter replacement cost per year under the unit's plan.

    Periodic plans charge price/interval per operating day; annualized plans
    prorate linearly with operating days.
    """
    if isinstance(plan, PeriodicFilterPlan):
        return ctx.t_operate_days * plan.filter_price_usd / plan.replacement_interval_days
    if isinstance(plan, AnnualizedFilterPlan):
        return plan.usd_per_365_days * (ctx.t_operate_days / 365.0)
    raise DomainError(f"unsupported filter plan: {plan!r}")


def pcy(spec: PurifierSpec, ctx: CostContext) -> PcyResult:
    """Normalized purification cost per year for one unit in one scenario.

    In FULL mode the purchase price is amortized over the configured lifetime;
    in TABLE5_COMPAT mode the initial component is zero, matching how the
    bundled catalog's published totals were computed.
    """
    params = ctx.params
    coverage = optimal_coverage(spec.cadr_cfm, params)
    multiplier = params.reference_area_sqft / coverage

    if params.initial_cost_mode is InitialCostMode.TABLE5_COMPAT:
        initial = 0.0
    else:
        initial = spec.initial_cost_usd / params.lifetime_years
    maintenance = maintenance_cost_per_year(ctx, spec.filter_plan)
    electricity = electricity_cost_per_year(ctx, spec.rated_watts)

    return PcyResult(
        total_usd_per_year=(initial + maintenance + electricity) * multiplier,
        initial_component_usd=initial,
        maintenance_usd_per_year=maintenance,
        electricity_usd_per_year=electricity,
        optimal_coverage_sqft=coverage,
        normalization_multiplier=multiplier,
    )


def pcy_breakdown(
    result: PcyResult, spec: PurifierSpec, ctx: CostContext
) -> BreakdownShares:
    """Fractional split of costs between purchase, filters, and electricity.

    Shares are always taken over the full three-component sum, with the
    amortized purchase price included even in TABLE5_COMPAT mode, so that the
    split describes what owning the unit actually costs.
    """
    initial = spec.initial_cost_usd / ctx.params.lifetime_years
    maintenance = result.maintenance_usd_per_year
    electricity = result.electricity_usd_per_year
    total = initial + maintenance + electricity
    if total <= 0:
        raise DomainError("cannot break down an all-zero cost")
    return BreakdownShares(
        initial=initial / total,
        maintenance=maintenance / total,
        electricity=electricity / total,
    )


def operating_days(calendar: AqiCalendar, threshold: int) -> int:
    """Days per year the unit runs under an AQI-gated schedule.

    A day counts only when its AQI is strictly above the threshold. A
    pre-aggregated exceedance count is returned as stored.
    """
    if isinstance(calendar, DailyAqiSeries):
        return sum(1 for _, aqi in calendar.values if aqi > threshold)
    return calendar.days_over_threshold
