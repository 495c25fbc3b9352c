"""Command-line front end.

Subcommands compute yearly costs (`pcy`), rank the catalog (`rank`,
`whatif`), split costs into components (`breakdown`), sweep regional tariffs
(`sweep`), audit the shipped data against its published figures
(`reproduce`), and host the HTTP service (`serve`).

Exit codes: 0 success, 1 fatal error, 2 partial success (e.g. unknown unit
ids listed on stderr while the known ones were computed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

from aircost.analytics import rank_by_pcy, state_sweep
from aircost.catalog import Catalog, DEFAULT_PARAMS, InitialCostMode, RateTable
from aircost.engine import CostContext, operating_days, pcy, pcy_breakdown
from aircost.errors import AircostError, NotFoundError
from aircost.datafiles import load_catalog, load_expected_pcy, load_rates, resolve_data_dir
from aircost.ingest import parse_aqi
from aircost.money import usd
from aircost import reproduce as repro

EXIT_OK = 0
EXIT_FATAL = 1
EXIT_PARTIAL = 2

FORMATS = ("human", "csv", "json")


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to the fatal exit code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_FATAL)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="aircost",
        description="Yearly cost analytics for home air purifiers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, scenario: bool = True) -> None:
        p.add_argument("--data", help="data directory (default: $AIRCOST_DATA or bundled)")
        p.add_argument("--catalog", help="catalog CSV path (overrides --data)")
        p.add_argument("--format", choices=FORMATS, default="human")
        if scenario:
            p.add_argument("--rates", help="rates CSV path (overrides --data)")
            g = p.add_mutually_exclusive_group()
            g.add_argument("--region", help="region code from the rate table (e.g. CA)")
            g.add_argument("--rate", type=float, help="explicit tariff in $/kWh")
            d = p.add_mutually_exclusive_group()
            d.add_argument("--days", type=float, help="operating days per year (default 365)")
            d.add_argument("--aqi", help="AQI calendar CSV; operating days = orange days")
            p.add_argument("--county", help="region to pick from the AQI file")
            p.add_argument("--mode", choices=[m.value for m in InitialCostMode],
                           default=InitialCostMode.FULL.value,
                           help="full amortizes the purchase price; table5 omits it")
            p.add_argument("--home-sqft", type=float, default=DEFAULT_PARAMS.reference_area_sqft,
                           help="home size the costs are normalized to")

    p_pcy = sub.add_parser("pcy", help="yearly cost for specific units")
    add_common(p_pcy)
    p_pcy.add_argument("units", nargs="*", help='unit ids ("Brand Model"); default: all')

    p_rank = sub.add_parser("rank", help="rank the whole catalog by yearly cost")
    add_common(p_rank)
    p_rank.add_argument("--top", type=int, help="limit output to the N cheapest")
    p_rank.add_argument("--threshold", type=float,
                        default=DEFAULT_PARAMS.medical_cost_threshold_usd,
                        help="yearly-cost reference line for the below/above flag")

    p_what = sub.add_parser("whatif", help="re-rank under a custom scenario")
    add_common(p_what)
    p_what.add_argument("--top", type=int, help="limit output to the N cheapest")
    p_what.add_argument("--threshold", type=float,
                        default=DEFAULT_PARAMS.medical_cost_threshold_usd)

    p_break = sub.add_parser("breakdown", help="component shares per unit")
    add_common(p_break)
    p_break.add_argument("units", nargs="*", help="unit ids; default: all")

    p_sweep = sub.add_parser("sweep", help="per-region cost summaries over a rate table")
    add_common(p_sweep)

    p_repro = sub.add_parser("reproduce", help="audit shipped data against published figures")
    p_repro.add_argument("--data", help="data directory (default: $AIRCOST_DATA or bundled)")
    p_repro.add_argument("--catalog", help="catalog CSV path (overrides --data)")
    p_repro.add_argument("--rates", help="rates CSV path (overrides --data)")
    p_repro.add_argument("--format", choices=FORMATS, default="human")
    p_repro.add_argument("--region", default="CA",
                         help="region whose tariff the published totals assume")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--data", help="data directory (default: $AIRCOST_DATA or bundled)")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=int(os.environ.get("AIRCOST_PORT", "8000")))

    return parser


def _load_inputs(args) -> tuple[Catalog, RateTable]:
    data_dir = resolve_data_dir(args.data) if args.data else None
    catalog_path = args.catalog or (data_dir / "table5_catalog.csv" if data_dir else None)
    catalog, report = load_catalog(catalog_path)
    if report.rejected:
        for err in report.rejected:
            print(
                f"warning: {catalog_path or 'catalog'} row {err.row_number} "
                f"({err.column}): {err.message}",
                file=sys.stderr,
            )
    rates_path = getattr(args, "rates", None) or (data_dir / "rates.csv" if data_dir else None)
    rates, _ = load_rates(rates_path)
    return catalog, rates


def _resolve_context(args, rates: RateTable) -> tuple[CostContext, dict]:
    params = replace(
        DEFAULT_PARAMS,
        initial_cost_mode=InitialCostMode(args.mode),
        reference_area_sqft=args.home_sqft,
    )
    if args.rate is not None:
        rate, region = args.rate, None
    else:
        region = args.region or "CA"
        rate = rates.get(region)

    if args.aqi:
        with open(args.aqi, "rb") as fh:
            calendars, report = parse_aqi(fh.read())
        if report.fatal:
            raise AircostError(f"{args.aqi}: {report.fatal}")
        if args.county:
            matches = [c for c in calendars if c.region == args.county]
            if not matches:
                raise NotFoundError(f"county {args.county!r} not present in {args.aqi}")
            calendar = matches[0]
        elif len(calendars) == 1:
            calendar = calendars[0]
        else:
            raise AircostError(
                f"{args.aqi} holds {len(calendars)} calendars; pick one with --county"
            )
        days = float(operating_days(calendar, params.aqi_orange_threshold))
        schedule = f"orange days from {calendar.region}"
    else:
        days = 365.0 if args.days is None else args.days
        schedule = "fixed days"

    ctx = CostContext(rate_usd_per_kwh=rate, t_operate_days=days, params=params)
    echo = {
        "region": region,
        "rate_usd_per_kwh": rate,
        "t_operate_days": days,
        "schedule": schedule,
        "mode": params.initial_cost_mode.value,
        "home_sqft": params.reference_area_sqft,
    }
    return ctx, echo


def _emit_table(rows: list[dict], columns: list[str], fmt: str, meta: dict) -> None:
    if fmt == "json":
        print(json.dumps({"parameters": meta, "results": rows}, indent=2))
        return
    if fmt == "csv":
        print(",".join(columns))
        for row in rows:
            print(",".join(_csv_cell(row.get(c, "")) for c in columns))
        return
    widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows else len(c)
              for c in columns}
    print("  ".join(c.ljust(widths[c]) for c in columns))
    for row in rows:
        print("  ".join(str(row.get(c, "")).ljust(widths[c]) for c in columns))


def _csv_cell(value) -> str:
    text = str(value)
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def _result_row(unit_id: str, result) -> dict:
    return {
        "id": unit_id,
        "total_usd_per_year": usd(result.total_usd_per_year),
        "initial_usd_per_year": usd(result.initial_component_usd),
        "maintenance_usd_per_year": usd(result.maintenance_usd_per_year),
        "electricity_usd_per_year": usd(result.electricity_usd_per_year),
        "optimal_coverage_sqft": f"{result.optimal_coverage_sqft:g}",
        "multiplier": f"{result.normalization_multiplier:.6f}",
    }


def cmd_pcy(args) -> int:
    catalog, rates = _load_inputs(args)
    ctx, echo = _resolve_context(args, rates)
    requested = args.units or catalog.ids()
    rows, unknown = [], []
    for unit_id in requested:
        try:
            unit = catalog.get(unit_id)
        except NotFoundError:
            unknown.append(unit_id)
            continue
        rows.append(_result_row(unit_id, pcy(unit, ctx)))
    columns = ["id", "total_usd_per_year", "initial_usd_per_year",
               "maintenance_usd_per_year", "electricity_usd_per_year",
               "optimal_coverage_sqft", "multiplier"]
    _emit_table(rows, columns, args.format, echo)
    if unknown:
        print("unknown unit ids: " + "; ".join(unknown), file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def _cmd_rank_like(args) -> int:
    catalog, rates = _load_inputs(args)
    ctx, echo = _resolve_context(args, rates)
    echo["threshold_usd"] = args.threshold
    ranking = rank_by_pcy(catalog, ctx)
    entries = ranking.entries[: args.top] if args.top else ranking.entries
    rows = []
    for position, entry in enumerate(entries, start=1):
        row = {"rank": position, **_result_row(entry.unit_id, entry.result)}
        row["below_threshold"] = str(entry.result.total_usd_per_year < args.threshold).lower()
        rows.append(row)
    columns = ["rank", "id", "total_usd_per_year", "initial_usd_per_year",
               "maintenance_usd_per_year", "electricity_usd_per_year",
               "optimal_coverage_sqft", "multiplier", "below_threshold"]
    _emit_table(rows, columns, args.format, echo)
    if ranking.errors:
        for unit_id, message in ranking.errors:
            print(f"skipped {unit_id}: {message}", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_rank(args) -> int:
    return _cmd_rank_like(args)


def cmd_whatif(args) -> int:
    return _cmd_rank_like(args)


def cmd_breakdown(args) -> int:
    catalog, rates = _load_inputs(args)
    ctx, echo = _resolve_context(args, rates)
    requested = args.units or catalog.ids()
    rows, unknown = [], []
    for unit_id in requested:
        try:
            unit = catalog.get(unit_id)
        except NotFoundError:
            unknown.append(unit_id)
            continue
        result = pcy(unit, ctx)
        shares = pcy_breakdown(result, unit, ctx)
        rows.append({
            "id": unit_id,
            "total_usd_per_year": usd(result.total_usd_per_year),
            "initial_share": f"{shares.initial:.6f}",
            "maintenance_share": f"{shares.maintenance:.6f}",
            "electricity_share": f"{shares.electricity:.6f}",
        })
    columns = ["id", "total_usd_per_year", "initial_share",
               "maintenance_share", "electricity_share"]
    _emit_table(rows, columns, args.format, echo)
    if unknown:
        print("unknown unit ids: " + "; ".join(unknown), file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_sweep(args) -> int:
    catalog, rates = _load_inputs(args)
    ctx, echo = _resolve_context(args, rates)
    sweep = state_sweep(catalog, rates, ctx)
    rows = []
    for region in sorted(sweep.per_region, key=lambda r: sweep.per_region[r].median):
        stats = sweep.per_region[region]
        rows.append({
            "region": region,
            "rate_usd_per_kwh": f"{rates.get(region):.3f}",
            "n": stats.n,
            "median_usd_per_year": usd(stats.median),
            "mean_usd_per_year": usd(stats.mean),
        })
    meta = {**echo, "median_range_usd": usd(sweep.median_range)}
    _emit_table(rows, ["region", "rate_usd_per_kwh", "n",
                       "median_usd_per_year", "mean_usd_per_year"], args.format, meta)
    if args.format == "human":
        print(f"median range: {usd(sweep.median_range)}")
    return EXIT_OK


def cmd_reproduce(args) -> int:
    data_dir = resolve_data_dir(args.data) if args.data else None
    catalog_path = args.catalog or (data_dir / "table5_catalog.csv" if data_dir else None)
    rates_path = args.rates or (data_dir / "rates.csv" if data_dir else None)
    catalog, _ = load_catalog(catalog_path)
    rates, _ = load_rates(rates_path)
    expected = load_expected_pcy(catalog_path)
    report = repro.build_report(catalog, expected, rates, region=args.region)
    if args.format == "json":
        print(json.dumps(repro.to_dict(report), indent=2))
    elif args.format == "csv":
        print(repro.render_csv(report), end="")
    else:
        print(repro.render_text(report), end="")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from aircost.service import create_app

    uvicorn.run(create_app(args.data), host=args.host, port=args.port)
    return EXIT_OK


COMMANDS = {
    "pcy": cmd_pcy,
    "rank": cmd_rank,
    "whatif": cmd_whatif,
    "breakdown": cmd_breakdown,
    "sweep": cmd_sweep,
    "reproduce": cmd_reproduce,
    "serve": cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except AircostError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FATAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FATAL


if __name__ == "__main__":
    sys.exit(main())
