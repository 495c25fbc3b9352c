"""Locating and loading the shipped datasets.

Resolution order for the data directory: explicit path argument, the
AIRCOST_DATA environment variable, then the copies bundled with the package.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from aircost.catalog import Catalog, RateTable
from aircost.errors import AircostError
from aircost.ingest import (
    ParseReport,
    catalog_from_specs,
    parse_catalog,
    parse_expected_pcy,
    parse_rates,
)

DATA_ENV_VAR = "AIRCOST_DATA"
CATALOG_FILENAME = "table5_catalog.csv"
RATES_FILENAME = "rates.csv"


def bundled_data_dir() -> Path:
    return Path(str(resources.files("aircost").joinpath("data")))


def resolve_data_dir(explicit: str | os.PathLike | None = None) -> Path:
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(DATA_ENV_VAR)
    if env:
        return Path(env)
    return bundled_data_dir()


def _read(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise AircostError(f"cannot read {path}: {exc}") from exc


def load_catalog(path: str | os.PathLike | None = None) -> tuple[Catalog, ParseReport]:
    """Load a catalog file, or the shipped one when no path is given."""
    file = Path(path) if path else resolve_data_dir() / CATALOG_FILENAME
    specs, report = parse_catalog(_read(file))
    if report.fatal:
        raise AircostError(f"{file}: {report.fatal}")
    return catalog_from_specs(specs), report


def load_expected_pcy(path: str | os.PathLike | None = None) -> dict[str, float]:
    file = Path(path) if path else resolve_data_dir() / CATALOG_FILENAME
    return parse_expected_pcy(_read(file))


def load_rates(path: str | os.PathLike | None = None) -> tuple[RateTable, ParseReport]:
    """Load a rate table file, or the shipped one when no path is given."""
    file = Path(path) if path else resolve_data_dir() / RATES_FILENAME
    table, report = parse_rates(_read(file))
    if report.fatal:
        raise AircostError(f"{file}: {report.fatal}")
    return table, report
