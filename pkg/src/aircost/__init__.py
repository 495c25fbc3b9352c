"""Cost-of-ownership analytics for home air purifiers.

The package computes an annualized purification cost for a purifier unit
(purchase amortization + filter replacements + electricity, normalized to a
reference home size), ships a catalog of 53 units with regional electricity
rates, and layers ranking, sweep, and reproduction reports on top. A CLI and
a FastAPI service expose the same engine.
"""

from aircost.catalog import (
    AnnualizedFilterPlan,
    AqiExceedanceCount,
    Catalog,
    CostModelParams,
    DailyAqiSeries,
    DEFAULT_PARAMS,
    InitialCostMode,
    PeriodicFilterPlan,
    PurifierSpec,
    RateTable,
)
from aircost.engine import CostContext, PcyResult, pcy
from aircost.errors import AircostError, DomainError, NotFoundError

__all__ = [
    "AircostError",
    "AnnualizedFilterPlan",
    "AqiExceedanceCount",
    "Catalog",
    "CostContext",
    "CostModelParams",
    "DailyAqiSeries",
    "DEFAULT_PARAMS",
    "DomainError",
    "InitialCostMode",
    "NotFoundError",
    "PcyResult",
    "PeriodicFilterPlan",
    "PurifierSpec",
    "RateTable",
    "pcy",
]

__version__ = "0.1.0"
