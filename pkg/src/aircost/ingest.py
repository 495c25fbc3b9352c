"""CSV parsing and serialization for catalogs, rate tables, and AQI calendars.

Formats are deliberately rigid for reproducibility: comma-separated, UTF-8,
mandatory header row, `.` decimal point, no thousands separators. Parsers
never raise on malformed input; bad rows land in the returned ParseReport
with a row number, column, and message, and a missing or wrong header makes
the whole parse fatal (zero rows accepted).
"""

from __future__ import annotations

import csv
import datetime
import io
import re
from dataclasses import dataclass, field

from aircost.catalog import (
    AnnualizedFilterPlan,
    AqiCalendar,
    AqiExceedanceCount,
    Catalog,
    DailyAqiSeries,
    PeriodicFilterPlan,
    PurifierSpec,
    RateTable,
    MAX_SANE_RATE_USD_PER_KWH,
)

CATALOG_COLUMNS = [
    "brand",
    "model",
    "model_year",
    "initial_cost_usd",
    "cadr_cfm",
    "rated_watts",
    "filter_price_usd",
    "replacement_interval_days",
    "annual_filter_cost_usd",
    "expected_pcy_usd",
]
RATES_COLUMNS = ["region", "usd_per_kwh", "name"]
AQI_DAILY_COLUMNS = ["region", "date", "aqi"]
AQI_COUNT_COLUMNS = ["region", "days_over_100"]

_NUMBER_RE = re.compile(r"^-?\d+(\.\d+)?$")
_INT_RE = re.compile(r"^-?\d+$")


@dataclass(frozen=True)
class RowError:
    row_number: int  # 1-based, counting the header as row 1
    column: str
    message: str


@dataclass
class ParseReport:
    accepted: int = 0
    rejected: list[RowError] = field(default_factory=list)
    fatal: str | None = None

    def reject(self, row_number: int, column: str, message: str) -> None:
        self.rejected.append(RowError(row_number, column, message))

    @property
    def ok(self) -> bool:
        return self.fatal is None and not self.rejected


class _RowRejected(Exception):
    pass


def _decode(text: str | bytes) -> tuple[str | None, str | None]:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8"), None
        except UnicodeDecodeError as exc:
            return None, f"input is not valid UTF-8: {exc}"
    return text, None


def _read_rows(body: str) -> list[list[str]]:
    return list(csv.reader(io.StringIO(body)))


def _check_header(
    rows: list[list[str]], expected: list[str], report: ParseReport, optional: set[str] = frozenset()
) -> bool:
    if not rows:
        report.fatal = "empty input: missing header row"
        return False
    header = [cell.strip() for cell in rows[0]]
    required = [c for c in expected if c not in optional]
    if header != expected and header != required:
        report.fatal = f"bad header: expected {','.join(expected)!r}, got {','.join(header)!r}"
        return False
    return True


def _number(cells: dict[str, str], column: str, row_number: int, report: ParseReport) -> float:
    raw = cells.get(column, "").strip()
    if not _NUMBER_RE.match(raw):
        report.reject(row_number, column, f"not a plain decimal number: {raw!r}")
        raise _RowRejected
    return float(raw)


def _text(cells: dict[str, str], column: str, row_number: int, report: ParseReport) -> str:
    raw = cells.get(column, "").strip()
    if not raw:
        report.reject(row_number, column, "must be nonempty")
        raise _RowRejected
    return raw


def _zip_row(header: list[str], row: list[str]) -> dict[str, str]:
    return {col: (row[i] if i < len(row) else "") for i, col in enumerate(header)}


def parse_catalog(text: str | bytes) -> tuple[list[PurifierSpec], ParseReport]:
    """Parse purifier rows; exactly one filter-plan column set may be filled.

    Periodic plans populate filter_price_usd + replacement_interval_days,
    annualized plans populate annual_filter_cost_usd; a row with both (or
    neither) is ambiguous and rejected. `expected_pcy_usd` is an audit column
    for the reproduction oracle and is ignored here.
    """
    report = ParseReport()
    body, err = _decode(text)
    if err:
        report.fatal = err
        return [], report
    try:
        rows = _read_rows(body)
    except csv.Error as exc:
        report.fatal = f"unreadable CSV: {exc}"
        return [], report
    if not _check_header(rows, CATALOG_COLUMNS, report):
        return [], report
    header = [c.strip() for c in rows[0]]

    specs: list[PurifierSpec] = []
    seen_ids: set[str] = set()
    for i, row in enumerate(rows[1:], start=2):
        if not any(cell.strip() for cell in row):
            continue
        cells = _zip_row(header, row)
        try:
            brand = _text(cells, "brand", i, report)
            model = _text(cells, "model", i, report)
            unit_id = f"{brand} {model}"
            if unit_id in seen_ids:
                report.reject(i, "model", f"duplicate unit id: {unit_id!r}")
                continue

            year_raw = cells.get("model_year", "").strip()
            model_year: int | None = None
            if year_raw:
                if not _INT_RE.match(year_raw):
                    report.reject(i, "model_year", f"not an integer: {year_raw!r}")
                    continue
                model_year = int(year_raw)

            initial = _number(cells, "initial_cost_usd", i, report)
            if initial < 0:
                report.reject(i, "initial_cost_usd", "must be nonnegative")
                continue
            cadr = _number(cells, "cadr_cfm", i, report)
            if not cadr > 0:
                report.reject(i, "cadr_cfm", "must be positive")
                continue
            watts = _number(cells, "rated_watts", i, report)
            if not watts > 0:
                report.reject(i, "rated_watts", "must be positive")
                continue

            price_raw = cells.get("filter_price_usd", "").strip()
            interval_raw = cells.get("replacement_interval_days", "").strip()
            annual_raw = cells.get("annual_filter_cost_usd", "").strip()
            periodic = bool(price_raw or interval_raw)
            if periodic and annual_raw:
                report.reject(
                    i,
                    "annual_filter_cost_usd",
                    "ambiguous filter plan: both periodic and annualized columns set",
                )
                continue
            if not periodic and not annual_raw:
                report.reject(i, "filter_price_usd", "no filter plan columns set")
                continue
            if periodic:
                price = _number(cells, "filter_price_usd", i, report)
                interval = _number(cells, "replacement_interval_days", i, report)
                if price < 0:
                    report.reject(i, "filter_price_usd", "must be nonnegative")
                    continue
                if not interval > 0:
                    report.reject(i, "replacement_interval_days", "must be positive")
                    continue
                plan = PeriodicFilterPlan(price, interval)
            else:
                annual = _number(cells, "annual_filter_cost_usd", i, report)
                if annual < 0:
                    report.reject(i, "annual_filter_cost_usd", "must be nonnegative")
                    continue
                plan = AnnualizedFilterPlan(annual)

            specs.append(
                PurifierSpec(
                    id=unit_id,
                    brand=brand,
                    model=model,
                    initial_cost_usd=initial,
                    cadr_cfm=cadr,
                    rated_watts=watts,
                    filter_plan=plan,
                    model_year=model_year,
                )
            )
            seen_ids.add(unit_id)
            report.accepted += 1
        except _RowRejected:
            continue
    return specs, report


def parse_expected_pcy(text: str | bytes) -> dict[str, float]:
    """Audit column reader: map of unit id to the published expected total.

    Used only by the reproduction report, never by the cost engine.
    """
    expected: dict[str, float] = {}
    body, err = _decode(text)
    if err:
        return expected
    try:
        rows = _read_rows(body)
    except csv.Error:
        return expected
    if not rows or [c.strip() for c in rows[0]] != CATALOG_COLUMNS:
        return expected
    for row in rows[1:]:
        cells = _zip_row(CATALOG_COLUMNS, row)
        raw = cells.get("expected_pcy_usd", "").strip()
        brand, model = cells.get("brand", "").strip(), cells.get("model", "").strip()
        if brand and model and _NUMBER_RE.match(raw):
            expected[f"{brand} {model}"] = float(raw)
    return expected


def parse_rates(text: str | bytes) -> tuple[RateTable, ParseReport]:
    """Parse region,usd_per_kwh[,name] rows; duplicate regions reject the later row."""
    report = ParseReport()
    body, err = _decode(text)
    if err:
        report.fatal = err
        return RateTable({}), report
    try:
        rows = _read_rows(body)
    except csv.Error as exc:
        report.fatal = f"unreadable CSV: {exc}"
        return RateTable({}), report
    if not _check_header(rows, RATES_COLUMNS, report, optional={"name"}):
        return RateTable({}), report
    header = [c.strip() for c in rows[0]]

    entries: dict[str, float] = {}
    names: dict[str, str] = {}
    for i, row in enumerate(rows[1:], start=2):
        if not any(cell.strip() for cell in row):
            continue
        cells = _zip_row(header, row)
        try:
            region = _text(cells, "region", i, report)
            if region in entries:
                report.reject(i, "region", f"duplicate region: {region!r}")
                continue
            rate = _number(cells, "usd_per_kwh", i, report)
            if not 0 < rate < MAX_SANE_RATE_USD_PER_KWH:
                report.reject(i, "usd_per_kwh", f"rate out of sane bounds: {rate}")
                continue
            entries[region] = rate
            name = cells.get("name", "").strip()
            if name:
                names[region] = name
            report.accepted += 1
        except _RowRejected:
            continue
    return RateTable(entries, names), report


def parse_aqi(text: str | bytes) -> tuple[list[AqiCalendar], ParseReport]:
    """Parse AQI calendars in either supported shape.

    Long form (region,date,aqi) yields one daily series per region; wide form
    (region,days_over_100) yields one exceedance count per region. Duplicate
    (region, date) pairs and duplicate wide-form regions reject the later row.
    """
    report = ParseReport()
    body, err = _decode(text)
    if err:
        report.fatal = err
        return [], report
    try:
        rows = _read_rows(body)
    except csv.Error as exc:
        report.fatal = f"unreadable CSV: {exc}"
        return [], report
    if not rows:
        report.fatal = "empty input: missing header row"
        return [], report
    header = [c.strip() for c in rows[0]]
    if header == AQI_DAILY_COLUMNS:
        return _parse_aqi_daily(rows, report)
    if header == AQI_COUNT_COLUMNS:
        return _parse_aqi_counts(rows, report)
    report.fatal = (
        f"bad header: expected {','.join(AQI_DAILY_COLUMNS)!r} or "
        f"{','.join(AQI_COUNT_COLUMNS)!r}, got {','.join(header)!r}"
    )
    return [], report


def _parse_aqi_daily(
    rows: list[list[str]], report: ParseReport
) -> tuple[list[AqiCalendar], ParseReport]:
    series: dict[str, list[tuple[datetime.date, int]]] = {}
    seen: set[tuple[str, datetime.date]] = set()
    for i, row in enumerate(rows[1:], start=2):
        if not any(cell.strip() for cell in row):
            continue
        cells = _zip_row(AQI_DAILY_COLUMNS, row)
        try:
            region = _text(cells, "region", i, report)
            date_raw = _text(cells, "date", i, report)
            try:
                date = datetime.date.fromisoformat(date_raw)
            except ValueError:
                report.reject(i, "date", f"not an ISO date: {date_raw!r}")
                continue
            if (region, date) in seen:
                report.reject(i, "date", f"duplicate date for {region!r}: {date}")
                continue
            aqi_raw = cells.get("aqi", "").strip()
            if not _INT_RE.match(aqi_raw):
                report.reject(i, "aqi", f"not an integer: {aqi_raw!r}")
                continue
            aqi = int(aqi_raw)
            if aqi < 0:
                report.reject(i, "aqi", "must be nonnegative")
                continue
            series.setdefault(region, []).append((date, aqi))
            seen.add((region, date))
            report.accepted += 1
        except _RowRejected:
            continue
    calendars: list[AqiCalendar] = [
        DailyAqiSeries(region=region, values=tuple(values))
        for region, values in series.items()
    ]
    return calendars, report


def _parse_aqi_counts(
    rows: list[list[str]], report: ParseReport
) -> tuple[list[AqiCalendar], ParseReport]:
    calendars: list[AqiCalendar] = []
    seen: set[str] = set()
    for i, row in enumerate(rows[1:], start=2):
        if not any(cell.strip() for cell in row):
            continue
        cells = _zip_row(AQI_COUNT_COLUMNS, row)
        try:
            region = _text(cells, "region", i, report)
            if region in seen:
                report.reject(i, "region", f"duplicate region: {region!r}")
                continue
            raw = cells.get("days_over_100", "").strip()
            if not _INT_RE.match(raw):
                report.reject(i, "days_over_100", f"not an integer: {raw!r}")
                continue
            days = int(raw)
            if not 0 <= days <= 366:
                report.reject(i, "days_over_100", f"must be in 0..366, got {days}")
                continue
            calendars.append(AqiExceedanceCount(region=region, days_over_threshold=days))
            seen.add(region)
            report.accepted += 1
        except _RowRejected:
            continue
    return calendars, report


def _fmt(value: float) -> str:
    """Plain decimal rendering without exponent notation or trailing cruft."""
    text = f"{value:.10f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-") else "0"


def serialize_catalog(
    specs: list[PurifierSpec], expected_pcy: dict[str, float] | None = None
) -> str:
    """Render specs back to the catalog CSV format; round-trips with parse_catalog."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CATALOG_COLUMNS)
    for spec in specs:
        if isinstance(spec.filter_plan, PeriodicFilterPlan):
            price = _fmt(spec.filter_plan.filter_price_usd)
            interval = _fmt(spec.filter_plan.replacement_interval_days)
            annual = ""
        else:
            price = interval = ""
            annual = _fmt(spec.filter_plan.usd_per_365_days)
        expected = ""
        if expected_pcy and spec.id in expected_pcy:
            expected = _fmt(expected_pcy[spec.id])
        writer.writerow(
            [
                spec.brand,
                spec.model,
                "" if spec.model_year is None else str(spec.model_year),
                _fmt(spec.initial_cost_usd),
                _fmt(spec.cadr_cfm),
                _fmt(spec.rated_watts),
                price,
                interval,
                annual,
                expected,
            ]
        )
    return out.getvalue()


def serialize_rates(table: RateTable) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(RATES_COLUMNS)
    for region, rate in table.entries.items():
        writer.writerow([region, _fmt(rate), table.names.get(region, "")])
    return out.getvalue()


def serialize_aqi(calendars: list[AqiCalendar]) -> str:
    """Serialize calendars; mixing both calendar shapes in one file is unsupported."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if calendars and all(isinstance(c, AqiExceedanceCount) for c in calendars):
        writer.writerow(AQI_COUNT_COLUMNS)
        for cal in calendars:
            writer.writerow([cal.region, str(cal.days_over_threshold)])
        return out.getvalue()
    writer.writerow(AQI_DAILY_COLUMNS)
    for cal in calendars:
        if not isinstance(cal, DailyAqiSeries):
            raise ValueError("cannot mix daily series and exceedance counts in one file")
        for date, aqi in cal.values:
            writer.writerow([cal.region, date.isoformat(), str(aqi)])
    return out.getvalue()


def catalog_from_specs(specs: list[PurifierSpec]) -> Catalog:
    return Catalog(units=tuple(specs))
