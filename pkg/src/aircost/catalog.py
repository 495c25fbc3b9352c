"""Domain types for purifier units, electricity rates, AQI calendars, and the
cost-model parameters. Everything here is immutable after construction and
safe to share across threads or requests.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass, field
from enum import Enum

from aircost.errors import DomainError, NotFoundError


class InitialCostMode(str, Enum):
    """Whether the yearly figure amortizes the purchase price.

    FULL: purchase price spread over the unit lifetime is included (default).
    TABLE5_COMPAT: purchase price excluded; reproduces the published PCY
        column shipped with the bundled catalog (its expected values were
        evidently computed without the amortized purchase price).
    """

    FULL = "full"
    TABLE5_COMPAT = "table5"


@dataclass(frozen=True)
class CostModelParams:
    """Model constants. Defaults mirror the published methodology."""

    lifetime_years: int = 10
    reference_area_sqft: float = 2500.0
    hours_per_day: float = 24.0
    coverage_factor: float = 1.5  # optimal coverage = CADR * 3/2
    aqi_orange_threshold: int = 100
    medical_cost_threshold_usd: float = 1990.0
    initial_cost_mode: InitialCostMode = InitialCostMode.FULL

    def __post_init__(self) -> None:
        if self.lifetime_years <= 0:
            raise DomainError("lifetime_years must be positive")
        for name in ("reference_area_sqft", "hours_per_day", "coverage_factor"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")
        if self.aqi_orange_threshold < 0:
            raise DomainError("aqi_orange_threshold must be nonnegative")
        if self.medical_cost_threshold_usd <= 0:
            raise DomainError("medical_cost_threshold_usd must be positive")


DEFAULT_PARAMS = CostModelParams()


@dataclass(frozen=True)
class PeriodicFilterPlan:
    """Replacement filters bought at a fixed price every N operating days."""

    filter_price_usd: float
    replacement_interval_days: float

    def __post_init__(self) -> None:
        if self.filter_price_usd < 0:
            raise DomainError("filter_price_usd must be nonnegative")
        if not self.replacement_interval_days > 0:
            raise DomainError("replacement_interval_days must be positive")


@dataclass(frozen=True)
class AnnualizedFilterPlan:
    """Filter spend expressed directly as dollars per 365 operating days."""

    usd_per_365_days: float

    def __post_init__(self) -> None:
        if self.usd_per_365_days < 0:
            raise DomainError("usd_per_365_days must be nonnegative")


FilterPlan = PeriodicFilterPlan | AnnualizedFilterPlan


@dataclass(frozen=True)
class PurifierSpec:
    """One purifier unit: acquisition cost, airflow rating, power draw, and
    its filter replacement plan. `id` is the "Brand Model" string and must be
    unique within a catalog.
    """

    id: str
    brand: str
    model: str
    initial_cost_usd: float
    cadr_cfm: float
    rated_watts: float
    filter_plan: FilterPlan
    model_year: int | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise DomainError("unit id must be nonempty")
        if self.initial_cost_usd < 0:
            raise DomainError(f"{self.id}: initial_cost_usd must be nonnegative")
        if not self.cadr_cfm > 0:
            raise DomainError(f"{self.id}: cadr_cfm must be positive")
        if not self.rated_watts > 0:
            raise DomainError(f"{self.id}: rated_watts must be positive")
        if not isinstance(self.filter_plan, (PeriodicFilterPlan, AnnualizedFilterPlan)):
            raise DomainError(f"{self.id}: filter_plan must be one of the two plan types")


@dataclass(frozen=True)
class Catalog:
    """An immutable collection of purifier specs with unique ids."""

    units: tuple[PurifierSpec, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for unit in self.units:
            if unit.id in seen:
                raise DomainError(f"duplicate unit id in catalog: {unit.id!r}")
            seen.add(unit.id)

    def __len__(self) -> int:
        return len(self.units)

    def __iter__(self):
        return iter(self.units)

    def get(self, unit_id: str) -> PurifierSpec:
        for unit in self.units:
            if unit.id == unit_id:
                return unit
        raise NotFoundError(f"unknown unit id: {unit_id!r}")

    def ids(self) -> list[str]:
        return [u.id for u in self.units]


# Rates above this are assumed to be data-entry mistakes (cents pasted as dollars).
MAX_SANE_RATE_USD_PER_KWH = 10.0


@dataclass(frozen=True)
class RateTable:
    """Regional electricity prices in dollars per kWh.

    An unknown region is always an error; there is no silent fallback to a
    national average. `names` optionally carries display names for regions.
    """

    entries: dict[str, float] = field(default_factory=dict)
    names: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for region, rate in self.entries.items():
            if not region:
                raise DomainError("rate table region code must be nonempty")
            if not 0 < rate < MAX_SANE_RATE_USD_PER_KWH:
                raise DomainError(
                    f"rate for {region!r} out of sane bounds (0, {MAX_SANE_RATE_USD_PER_KWH}): {rate}"
                )

    def get(self, region: str) -> float:
        try:
            return self.entries[region]
        except KeyError:
            raise NotFoundError(f"unknown region: {region!r}") from None

    def regions(self) -> list[str]:
        return list(self.entries)


@dataclass(frozen=True)
class DailyAqiSeries:
    """Per-day AQI observations for one region; dates must be unique."""

    region: str
    values: tuple[tuple[datetime.date, int], ...]

    def __post_init__(self) -> None:
        dates = [d for d, _ in self.values]
        if len(dates) != len(set(dates)):
            raise DomainError(f"{self.region}: duplicate dates in AQI series")
        for d, aqi in self.values:
            if aqi < 0:
                raise DomainError(f"{self.region}: AQI must be nonnegative on {d}")


@dataclass(frozen=True)
class AqiExceedanceCount:
    """Pre-aggregated count of days per year above the orange-day threshold."""

    region: str
    days_over_threshold: int

    def __post_init__(self) -> None:
        if not 0 <= self.days_over_threshold <= 366:
            raise DomainError(
                f"{self.region}: days_over_threshold must be in 0..366, "
                f"got {self.days_over_threshold}"
            )


AqiCalendar = DailyAqiSeries | AqiExceedanceCount
