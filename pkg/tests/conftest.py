import pytest

from aircost.catalog import (
    AnnualizedFilterPlan,
    CostModelParams,
    InitialCostMode,
    PurifierSpec,
)
from aircost.datafiles import load_catalog, load_expected_pcy, load_rates
from aircost.engine import CostContext


@pytest.fixture(scope="session")
def catalog():
    cat, report = load_catalog()
    assert report.ok
    return cat


@pytest.fixture(scope="session")
def rates():
    table, report = load_rates()
    assert report.ok
    return table


@pytest.fixture(scope="session")
def expected_pcy():
    return load_expected_pcy()


@pytest.fixture
def compat_ctx():
    params = CostModelParams(initial_cost_mode=InitialCostMode.TABLE5_COMPAT)
    return CostContext(rate_usd_per_kwh=0.251, t_operate_days=365.0, params=params)


@pytest.fixture
def full_ctx():
    return CostContext(rate_usd_per_kwh=0.251, t_operate_days=365.0)


def make_spec(
    unit_id: str = "Acme One",
    initial: float = 100.0,
    cadr: float = 200.0,
    watts: float = 50.0,
    annual_filter: float = 40.0,
) -> PurifierSpec:
    brand, _, model = unit_id.partition(" ")
    return PurifierSpec(
        id=unit_id,
        brand=brand,
        model=model or "One",
        initial_cost_usd=initial,
        cadr_cfm=cadr,
        rated_watts=watts,
        filter_plan=AnnualizedFilterPlan(annual_filter),
    )
