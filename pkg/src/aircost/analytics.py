"""Descriptive statistics, regression, ranking, and scenario sweeps over a
purifier catalog.

Batch operations never abort on a bad unit; per-unit failures are collected
into the result so one malformed row cannot kill a report. Outputs are sorted
deterministically regardless of evaluation order.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, replace
from enum import Enum

from aircost.catalog import AqiCalendar, Catalog, RateTable
from aircost.engine import CostContext, PcyResult, operating_days, pcy
from aircost.errors import AircostError, DomainError


@dataclass(frozen=True)
class SummaryStats:
    """Count, mean, median, population stddev, and coefficient of variation.

    `cv` is None when the mean is zero (undefined rather than infinite).
    """

    n: int
    mean: float
    median: float
    stddev: float
    cv: float | None


class FitOrientation(str, Enum):
    COVERAGE_EXPLAINS_PRICE = "coverage_explains_price"
    PRICE_EXPLAINS_COVERAGE = "price_explains_coverage"


@dataclass(frozen=True)
class LinearFit:
    slope: float
    intercept: float
    r_squared: float
    orientation: FitOrientation


@dataclass(frozen=True)
class ThresholdReport:
    """How the catalog splits around a yearly cost threshold.

    `below` is strict (total < threshold); everything else counts as above,
    so n_below + n_above always equals the input size.
    """

    threshold_usd: float
    n_below: int
    n_above: int
    items_above: tuple[str, ...]


@dataclass(frozen=True)
class RankEntry:
    unit_id: str
    brand: str
    model: str
    result: PcyResult


@dataclass(frozen=True)
class RankingResult:
    entries: tuple[RankEntry, ...]
    errors: tuple[tuple[str, str], ...]  # (unit id, message)


@dataclass(frozen=True)
class StateSweepResult:
    per_region: dict[str, SummaryStats]
    median_range: float
    errors: tuple[tuple[str, str], ...]  # (region:unit, message)


@dataclass(frozen=True)
class CountyScenarioResult:
    per_county: dict[str, SummaryStats]
    operating_days: dict[str, int]
    pooled_median: float
    errors: tuple[tuple[str, str], ...]


def summarize(values: list[float]) -> SummaryStats:
    """Summary statistics of a nonempty list.

    Median is the middle element for odd n, the mean of the two middle
    elements for even n. Stddev is the population convention.
    """
    if not values:
        raise DomainError("cannot summarize an empty list")
    mean = statistics.fmean(values)
    stddev = statistics.pstdev(values)
    cv = stddev / mean if mean != 0 else None
    return SummaryStats(
        n=len(values),
        mean=mean,
        median=statistics.median(values),
        stddev=stddev,
        cv=cv,
    )


def ols_fit(
    xs: list[float],
    ys: list[float],
    orientation: FitOrientation = FitOrientation.COVERAGE_EXPLAINS_PRICE,
) -> LinearFit:
    """Least-squares line y = slope*x + intercept with its R².

    The orientation tag records which variable was used as the regressor so
    that fits of the same pair in both directions stay distinguishable.
    """
    if len(xs) != len(ys):
        raise DomainError("xs and ys must have equal length")
    if len(xs) < 2:
        raise DomainError("need at least two points to fit a line")
    mean_x = statistics.fmean(xs)
    mean_y = statistics.fmean(ys)
    sxx = sum((x - mean_x) ** 2 for x in xs)
    if sxx == 0:
        raise DomainError("xs are all identical; slope is undefined")
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    ss_tot = sum((y - mean_y) ** 2 for y in ys)
    if ss_tot == 0 or all(y == ys[0] for y in ys):
        r_squared = 1.0  # constant ys are perfectly predicted by the flat line
    else:
        ss_res = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
        # mathematically in [0, 1] for OLS with intercept; clamp float noise
        r_squared = min(max(1.0 - ss_res / ss_tot, 0.0), 1.0)
    return LinearFit(slope=slope, intercept=intercept, r_squared=r_squared, orientation=orientation)


def rank_by_pcy(catalog: Catalog, ctx: CostContext) -> RankingResult:
    """All units ordered by ascending total cost; ties break on (brand, model).

    Units that fail to evaluate are reported in `errors` instead of aborting
    the ranking.
    """
    if len(catalog) == 0:
        raise DomainError("cannot rank an empty catalog")
    entries: list[RankEntry] = []
    errors: list[tuple[str, str]] = []
    for unit in catalog:
        try:
            entries.append(RankEntry(unit.id, unit.brand, unit.model, pcy(unit, ctx)))
        except AircostError as exc:
            errors.append((unit.id, str(exc)))
    entries.sort(key=lambda e: (e.result.total_usd_per_year, e.brand, e.model))
    return RankingResult(entries=tuple(entries), errors=tuple(errors))


def state_sweep(
    catalog: Catalog, rates: RateTable, ctx_template: CostContext
) -> StateSweepResult:
    """Recompute costs for every region's tariff; summarize per region.

    `median_range` is max median minus min median across regions.
    """
    if not rates.entries:
        raise DomainError("rate table is empty")
    per_region: dict[str, SummaryStats] = {}
    errors: list[tuple[str, str]] = []
    for region in rates.regions():
        ctx = replace(ctx_template, rate_usd_per_kwh=rates.get(region))
        totals: list[float] = []
        for unit in catalog:
            try:
                totals.append(pcy(unit, ctx).total_usd_per_year)
            except AircostError as exc:
                errors.append((f"{region}:{unit.id}", str(exc)))
        if totals:
            per_region[region] = summarize(totals)
    medians = [s.median for s in per_region.values()]
    median_range = max(medians) - min(medians) if medians else 0.0
    return StateSweepResult(
        per_region=per_region, median_range=median_range, errors=tuple(errors)
    )


def threshold_report(
    pcys: list[tuple[str, float]], threshold_usd: float
) -> ThresholdReport:
    """Partition (id, total) pairs around a threshold; below means strictly less."""
    if not pcys:
        raise DomainError("threshold report needs at least one value")
    n_below = sum(1 for _, total in pcys if total < threshold_usd)
    items_above = tuple(uid for uid, total in pcys if not total < threshold_usd)
    return ThresholdReport(
        threshold_usd=threshold_usd,
        n_below=n_below,
        n_above=len(pcys) - n_below,
        items_above=items_above,
    )


def county_scenario(
    catalog: Catalog, calendars: list[AqiCalendar], ctx_template: CostContext
) -> CountyScenarioResult:
    """Costs under an AQI-gated schedule for each county calendar.

    Each county's operating days are the days its AQI exceeds the orange-day
    threshold; the pooled median is taken over every (county, unit) pair.
    """
    if not calendars:
        raise DomainError("need at least one AQI calendar")
    threshold = ctx_template.params.aqi_orange_threshold
    per_county: dict[str, SummaryStats] = {}
    days_by_county: dict[str, int] = {}
    pooled: list[float] = []
    errors: list[tuple[str, str]] = []
    for calendar in calendars:
        days = operating_days(calendar, threshold)
        days_by_county[calendar.region] = days
        ctx = replace(ctx_template, t_operate_days=float(days))
        totals: list[float] = []
        for unit in catalog:
            try:
                totals.append(pcy(unit, ctx).total_usd_per_year)
            except AircostError as exc:
                errors.append((f"{calendar.region}:{unit.id}", str(exc)))
        if totals:
            per_county[calendar.region] = summarize(totals)
            pooled.extend(totals)
    if not pooled:
        raise DomainError("no unit evaluated successfully in any county")
    return CountyScenarioResult(
        per_county=per_county,
        operating_days=days_by_county,
        pooled_median=statistics.median(pooled),
        errors=tuple(errors),
    )
