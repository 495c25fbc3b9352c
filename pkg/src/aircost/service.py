"""Stateless HTTP facade over the catalog, cost engine, and analytics.

Every response echoes the scenario it was computed under so a client can
display its assumptions, and money is serialized as 2-decimal strings to keep
float drift out of the wire format. No request mutates server state; the
catalog and rate table are loaded once and shared read-only.
"""

from __future__ import annotations

import datetime
import os
from dataclasses import replace
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field, model_validator

from aircost.analytics import FitOrientation, ols_fit, rank_by_pcy
from aircost.catalog import (
    AnnualizedFilterPlan,
    AqiExceedanceCount,
    Catalog,
    DailyAqiSeries,
    DEFAULT_PARAMS,
    InitialCostMode,
    PeriodicFilterPlan,
    PurifierSpec,
    RateTable,
)
from aircost.engine import CostContext, operating_days, pcy, pcy_breakdown
from aircost.errors import DomainError, NotFoundError
from aircost.datafiles import load_catalog, load_rates, resolve_data_dir
from aircost.money import usd
from aircost.reference import HEPA_EFFICIENCY, MERV_RATINGS, POLLUTANT_SIZES


# --- request / response models ------------------------------------------------


class DailyAqiEntry(BaseModel):
    date: datetime.date
    aqi: int = Field(ge=0)


class CalendarPayload(BaseModel):
    """Inline AQI calendar: either a daily series or a pre-counted total."""

    days_over_threshold: int | None = Field(default=None, ge=0, le=366)
    daily: list[DailyAqiEntry] | None = None

    @model_validator(mode="after")
    def _exactly_one_shape(self) -> "CalendarPayload":
        if (self.days_over_threshold is None) == (self.daily is None):
            raise ValueError("provide exactly one of days_over_threshold or daily")
        return self


class FilterPlanPayload(BaseModel):
    """Exactly one plan variant: periodic price+interval, or annualized cost."""

    filter_price_usd: float | None = Field(default=None, ge=0)
    replacement_interval_days: float | None = Field(default=None, gt=0)
    annual_filter_cost_usd: float | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _exactly_one_variant(self) -> "FilterPlanPayload":
        periodic = self.filter_price_usd is not None or self.replacement_interval_days is not None
        annualized = self.annual_filter_cost_usd is not None
        if periodic and annualized:
            raise ValueError("filter plan is ambiguous: both periodic and annualized fields set")
        if periodic and (self.filter_price_usd is None or self.replacement_interval_days is None):
            raise ValueError("periodic plan needs both filter_price_usd and replacement_interval_days")
        if not periodic and not annualized:
            raise ValueError("filter plan is empty")
        return self

    def to_plan(self):
        if self.annual_filter_cost_usd is not None:
            return AnnualizedFilterPlan(self.annual_filter_cost_usd)
        return PeriodicFilterPlan(self.filter_price_usd, self.replacement_interval_days)


class InlineSpecPayload(BaseModel):
    brand: str = Field(min_length=1)
    model: str = Field(min_length=1)
    initial_cost_usd: float = Field(ge=0)
    cadr_cfm: float = Field(gt=0)
    rated_watts: float = Field(gt=0)
    filter_plan: FilterPlanPayload
    model_year: int | None = None

    def to_spec(self) -> PurifierSpec:
        return PurifierSpec(
            id=f"{self.brand} {self.model}",
            brand=self.brand,
            model=self.model,
            initial_cost_usd=self.initial_cost_usd,
            cadr_cfm=self.cadr_cfm,
            rated_watts=self.rated_watts,
            filter_plan=self.filter_plan.to_plan(),
            model_year=self.model_year,
        )


class WhatIfRequest(BaseModel):
    """Scenario for /api/rank and /api/pcy.

    Exactly one of region/rate and exactly one of days/calendar must be set.
    """

    region: str | None = None
    rate_usd_per_kwh: float | None = Field(default=None, gt=0)
    days: float | None = Field(default=None, ge=0, le=366)
    calendar: CalendarPayload | None = None
    home_area_sqft: float = Field(default=DEFAULT_PARAMS.reference_area_sqft, gt=0)
    mode: InitialCostMode = InitialCostMode.FULL
    threshold_usd: float = Field(default=DEFAULT_PARAMS.medical_cost_threshold_usd, gt=0)
    units: list[str] | None = None
    spec: InlineSpecPayload | None = None

    @model_validator(mode="after")
    def _invariants(self) -> "WhatIfRequest":
        if (self.region is None) == (self.rate_usd_per_kwh is None):
            raise ValueError("provide exactly one of region or rate_usd_per_kwh")
        if (self.days is None) == (self.calendar is None):
            raise ValueError("provide exactly one of days or calendar")
        return self


class SharesPayload(BaseModel):
    initial: float
    maintenance: float
    electricity: float


class PcyPayload(BaseModel):
    id: str
    total_usd_per_year: str
    initial_usd_per_year: str
    maintenance_usd_per_year: str
    electricity_usd_per_year: str
    optimal_coverage_sqft: float
    normalization_multiplier: float
    shares: SharesPayload | None
    below_medical_threshold: bool


class ScenarioEcho(BaseModel):
    mode: InitialCostMode
    region: str | None
    rate_usd_per_kwh: float
    t_operate_days: float
    home_area_sqft: float
    threshold_usd: float


class RankResponse(BaseModel):
    scenario: ScenarioEcho
    results: list[PcyPayload]


class PcyResponse(BaseModel):
    scenario: ScenarioEcho
    result: PcyPayload


class CatalogUnit(BaseModel):
    id: str
    brand: str
    model: str
    model_year: int | None
    initial_cost_usd: str
    cadr_cfm: float
    rated_watts: float
    optimal_coverage_sqft: float
    filter_plan: dict


class RateEntry(BaseModel):
    region: str
    usd_per_kwh: float
    name: str | None


class FitParams(BaseModel):
    slope: float
    intercept: float
    r_squared: float


class FitResponse(BaseModel):
    n: int
    display_orientation: str
    fits: dict[str, FitParams] | None


# --- app factory ----------------------------------------------------------------


def create_app(data_dir: str | os.PathLike | None = None,
               frontend_dir: str | os.PathLike | None = None) -> FastAPI:
    data = resolve_data_dir(data_dir) if data_dir else None
    catalog, _ = load_catalog(data / "table5_catalog.csv" if data else None)
    rates, _ = load_rates(data / "rates.csv" if data else None)

    app = FastAPI(title="aircost", version="0.1.0")
    app.state.catalog = catalog
    app.state.rates = rates

    @app.exception_handler(RequestValidationError)
    async def _validation_to_400(request: Request, exc: RequestValidationError):
        detail = [
            {"field": ".".join(str(p) for p in err["loc"] if p != "body"),
             "message": err["msg"]}
            for err in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"detail": detail})

    @app.exception_handler(NotFoundError)
    async def _not_found_to_404(request: Request, exc: NotFoundError):
        return JSONResponse(status_code=404, content={"detail": str(exc)})

    @app.exception_handler(DomainError)
    async def _domain_to_400(request: Request, exc: DomainError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok", "units": len(catalog)}

    @app.get("/api/catalog", response_model=list[CatalogUnit])
    def get_catalog():
        return [_catalog_unit(u) for u in catalog]

    @app.get("/api/rates", response_model=list[RateEntry])
    def get_rates():
        return [
            RateEntry(region=region, usd_per_kwh=rate, name=rates.names.get(region))
            for region, rate in rates.entries.items()
        ]

    @app.get("/api/reference/hepa")
    def reference_hepa():
        return [{"class_label": label, "efficiency": eff}
                for label, eff in HEPA_EFFICIENCY.items()]

    @app.get("/api/reference/merv")
    def reference_merv():
        return [
            {
                "rating": r.rating,
                "dust_efficiency": r.dust_efficiency,
                "particle_size": r.particle_size,
                "efficiency_lower_bound": r.efficiency_lower_bound,
            }
            for r in sorted(MERV_RATINGS.values(), key=lambda m: -m.rating)
        ]

    @app.get("/api/reference/particles")
    def reference_particles():
        return [
            {"name": p.name, "min_microns": p.min_microns, "max_microns": p.max_microns}
            for p in POLLUTANT_SIZES
        ]

    @app.get("/api/fit", response_model=FitResponse)
    def get_fit():
        coverage = [u.cadr_cfm * DEFAULT_PARAMS.coverage_factor for u in catalog]
        price = [u.initial_cost_usd for u in catalog]
        try:
            fits = {
                FitOrientation.COVERAGE_EXPLAINS_PRICE.value: _fit_params(
                    ols_fit(coverage, price, FitOrientation.COVERAGE_EXPLAINS_PRICE)
                ),
                FitOrientation.PRICE_EXPLAINS_COVERAGE.value: _fit_params(
                    ols_fit(price, coverage, FitOrientation.PRICE_EXPLAINS_COVERAGE)
                ),
            }
        except DomainError:
            fits = None
        return FitResponse(
            n=len(catalog),
            display_orientation=FitOrientation.COVERAGE_EXPLAINS_PRICE.value,
            fits=fits,
        )

    @app.post("/api/rank", response_model=RankResponse)
    def post_rank(req: WhatIfRequest):
        ctx, echo = _resolve(req, rates)
        subset = _filter_catalog(catalog, req.units)
        ranking = rank_by_pcy(subset, ctx)
        results = [
            _pcy_payload(subset.get(e.unit_id), e.result, ctx, req.threshold_usd)
            for e in ranking.entries
        ]
        return RankResponse(scenario=echo, results=results)

    @app.post("/api/pcy", response_model=PcyResponse)
    def post_pcy(req: WhatIfRequest):
        ctx, echo = _resolve(req, rates)
        if req.spec is not None:
            unit = req.spec.to_spec()
        elif req.units and len(req.units) == 1:
            unit = catalog.get(req.units[0])
        else:
            raise DomainError("provide an inline spec or exactly one unit id")
        result = pcy(unit, ctx)
        return PcyResponse(
            scenario=echo, result=_pcy_payload(unit, result, ctx, req.threshold_usd)
        )

    _mount_frontend(app, frontend_dir)
    return app


def _catalog_unit(u: PurifierSpec) -> CatalogUnit:
    if isinstance(u.filter_plan, PeriodicFilterPlan):
        plan = {
            "kind": "periodic",
            "filter_price_usd": usd(u.filter_plan.filter_price_usd),
            "replacement_interval_days": u.filter_plan.replacement_interval_days,
        }
    else:
        plan = {"kind": "annualized",
                "annual_filter_cost_usd": usd(u.filter_plan.usd_per_365_days)}
    return CatalogUnit(
        id=u.id,
        brand=u.brand,
        model=u.model,
        model_year=u.model_year,
        initial_cost_usd=usd(u.initial_cost_usd),
        cadr_cfm=u.cadr_cfm,
        rated_watts=u.rated_watts,
        optimal_coverage_sqft=u.cadr_cfm * DEFAULT_PARAMS.coverage_factor,
        filter_plan=plan,
    )


def _fit_params(fit) -> FitParams:
    return FitParams(slope=fit.slope, intercept=fit.intercept, r_squared=fit.r_squared)


def _resolve(req: WhatIfRequest, rates: RateTable) -> tuple[CostContext, ScenarioEcho]:
    rate = req.rate_usd_per_kwh if req.rate_usd_per_kwh is not None else rates.get(req.region)
    params = replace(
        DEFAULT_PARAMS,
        initial_cost_mode=req.mode,
        reference_area_sqft=req.home_area_sqft,
        medical_cost_threshold_usd=req.threshold_usd,
    )
    if req.calendar is not None:
        if req.calendar.daily is not None:
            series = DailyAqiSeries(
                region="inline",
                values=tuple((e.date, e.aqi) for e in req.calendar.daily),
            )
            days = float(operating_days(series, params.aqi_orange_threshold))
        else:
            days = float(
                operating_days(
                    AqiExceedanceCount("inline", req.calendar.days_over_threshold),
                    params.aqi_orange_threshold,
                )
            )
    else:
        days = req.days
    ctx = CostContext(rate_usd_per_kwh=rate, t_operate_days=days, params=params)
    echo = ScenarioEcho(
        mode=req.mode,
        region=req.region,
        rate_usd_per_kwh=rate,
        t_operate_days=days,
        home_area_sqft=req.home_area_sqft,
        threshold_usd=req.threshold_usd,
    )
    return ctx, echo


def _filter_catalog(catalog: Catalog, units: list[str] | None) -> Catalog:
    if units is None:
        return catalog
    missing = [u for u in units if u not in set(catalog.ids())]
    if missing:
        raise NotFoundError("unknown unit ids: " + "; ".join(missing))
    keep = set(units)
    return Catalog(units=tuple(u for u in catalog if u.id in keep))


def _pcy_payload(unit: PurifierSpec, result, ctx: CostContext, threshold: float) -> PcyPayload:
    try:
        b = pcy_breakdown(result, unit, ctx)
        shares = SharesPayload(initial=b.initial, maintenance=b.maintenance,
                               electricity=b.electricity)
    except DomainError:
        shares = None  # all components zero; no defined split
    return PcyPayload(
        id=unit.id,
        total_usd_per_year=usd(result.total_usd_per_year),
        initial_usd_per_year=usd(result.initial_component_usd),
        maintenance_usd_per_year=usd(result.maintenance_usd_per_year),
        electricity_usd_per_year=usd(result.electricity_usd_per_year),
        optimal_coverage_sqft=result.optimal_coverage_sqft,
        normalization_multiplier=result.normalization_multiplier,
        shares=shares,
        below_medical_threshold=result.total_usd_per_year < threshold,
    )


def _mount_frontend(app: FastAPI, frontend_dir: str | os.PathLike | None) -> None:
    """Serve the built what-if UI when its bundle is present."""
    candidates = []
    if frontend_dir:
        candidates.append(Path(frontend_dir))
    env = os.environ.get("AIRCOST_FRONTEND")
    if env:
        candidates.append(Path(env))
    candidates.append(Path.cwd() / "frontend" / "dist")
    for candidate in candidates:
        if candidate.is_dir() and (candidate / "index.html").exists():
            from fastapi.staticfiles import StaticFiles

            app.mount("/", StaticFiles(directory=str(candidate), html=True), name="ui")
            return
