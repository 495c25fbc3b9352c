import datetime

import pytest

from aircost.catalog import (
    AnnualizedFilterPlan,
    AqiExceedanceCount,
    Catalog,
    CostModelParams,
    DailyAqiSeries,
    PeriodicFilterPlan,
    RateTable,
)
from aircost.errors import DomainError, NotFoundError
from tests.conftest import make_spec


class TestPurifierSpec:
    def test_valid_spec(self):
        spec = make_spec()
        assert spec.id == "Acme One"

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"initial": -1.0},
            {"cadr": 0.0},
            {"cadr": -10.0},
            {"watts": 0.0},
        ],
    )
    def test_invariants(self, kwargs):
        with pytest.raises(DomainError):
            make_spec(**kwargs)

    def test_specs_are_frozen(self):
        spec = make_spec()
        with pytest.raises(AttributeError):
            spec.cadr_cfm = 1.0


class TestFilterPlans:
    def test_periodic_needs_positive_interval(self):
        with pytest.raises(DomainError):
            PeriodicFilterPlan(filter_price_usd=10.0, replacement_interval_days=0.0)

    def test_periodic_allows_free_filters(self):
        assert PeriodicFilterPlan(0.0, 90.0).filter_price_usd == 0.0

    def test_annualized_rejects_negative(self):
        with pytest.raises(DomainError):
            AnnualizedFilterPlan(-0.01)


class TestCatalog:
    def test_duplicate_ids_rejected(self):
        with pytest.raises(DomainError, match="duplicate"):
            Catalog(units=(make_spec(), make_spec()))

    def test_get_unknown_id(self):
        cat = Catalog(units=(make_spec(),))
        with pytest.raises(NotFoundError, match="Nope"):
            cat.get("Nope Nothing")

    def test_load_is_idempotent(self, catalog):
        from aircost.datafiles import load_catalog

        again, _ = load_catalog()
        assert again == catalog


class TestRateTable:
    def test_lookup(self):
        table = RateTable({"CA": 0.251})
        assert table.get("CA") == 0.251

    def test_unknown_region_is_an_error_not_a_fallback(self):
        table = RateTable({"CA": 0.251, "US": 0.145})
        with pytest.raises(NotFoundError, match="ZZ"):
            table.get("ZZ")

    @pytest.mark.parametrize("rate", [0.0, -0.1, 10.0, 25.1])
    def test_sanity_bounds(self, rate):
        with pytest.raises(DomainError):
            RateTable({"XX": rate})


class TestAqiCalendars:
    def test_daily_series_rejects_duplicate_dates(self):
        day = datetime.date(2021, 6, 1)
        with pytest.raises(DomainError, match="duplicate"):
            DailyAqiSeries(region="LA", values=((day, 50), (day, 60)))

    def test_daily_series_rejects_negative_aqi(self):
        with pytest.raises(DomainError):
            DailyAqiSeries(region="LA", values=((datetime.date(2021, 6, 1), -1),))

    @pytest.mark.parametrize("days", [-1, 367])
    def test_exceedance_bounds(self, days):
        with pytest.raises(DomainError):
            AqiExceedanceCount(region="LA", days_over_threshold=days)

    def test_exceedance_accepts_leap_year_count(self):
        assert AqiExceedanceCount("LA", 366).days_over_threshold == 366


class TestCostModelParams:
    def test_defaults(self):
        params = CostModelParams()
        assert params.lifetime_years == 10
        assert params.reference_area_sqft == 2500.0
        assert params.hours_per_day == 24.0
        assert params.coverage_factor == 1.5
        assert params.aqi_orange_threshold == 100
        assert params.medical_cost_threshold_usd == 1990.0

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"lifetime_years": 0},
            {"reference_area_sqft": 0.0},
            {"coverage_factor": -1.5},
            {"medical_cost_threshold_usd": 0.0},
        ],
    )
    def test_positivity(self, kwargs):
        with pytest.raises(DomainError):
            CostModelParams(**kwargs)
