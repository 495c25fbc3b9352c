import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { parseAqiCsv } from "../src/calendar.js";
import { debounce } from "../src/debounce.js";
import { formatMoney, formatPercent, formatRate } from "../src/format.js";
import { LatestGate } from "../src/seq.js";
import { sortRows, toggleSort, type SortState } from "../src/sorting.js";
import { buildRankingRows } from "../src/tablemodel.js";
import type { RankResponse } from "../src/types.js";

describe("formatMoney", () => {
  it("prefixes a dollar sign and groups thousands", () => {
    expect(formatMoney("660.99")).toBe("$660.99");
    expect(formatMoney("1155.77")).toBe("$1,155.77");
    expect(formatMoney("12152.34")).toBe("$12,152.34");
    expect(formatMoney("0.00")).toBe("$0.00");
  });

  it("never changes the digits the service sent", () => {
    expect(formatMoney("1999.99").replace(/[$,]/g, "")).toBe("1999.99");
  });
});

describe("formatPercent / formatRate", () => {
  it("rounds for display only", () => {
    expect(formatPercent(0.14466)).toBe("14.5%");
    expect(formatRate(0.251)).toBe("25.1 ¢/kWh");
  });
});

describe("LatestGate", () => {
  it("accepts only the newest sequence number", () => {
    const gate = new LatestGate();
    const first = gate.next();
    const second = gate.next();
    expect(gate.isCurrent(first)).toBe(false); // stale: a newer request exists
    expect(gate.isCurrent(second)).toBe(true);
  });
});

describe("debounce", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("collapses a burst into one trailing call", () => {
    const calls: number[] = [];
    const push = debounce((n: number) => calls.push(n), 150);
    push(1);
    push(2);
    push(3);
    vi.advanceTimersByTime(149);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual([3]);
  });

  it("separate bursts each fire once", () => {
    const calls: number[] = [];
    const push = debounce((n: number) => calls.push(n), 100);
    push(1);
    vi.advanceTimersByTime(100);
    push(2);
    vi.advanceTimersByTime(100);
    expect(calls).toEqual([1, 2]);
  });
});

describe("sorting", () => {
  const response: RankResponse = {
    scenario: {
      mode: "table5",
      region: "CA",
      rate_usd_per_kwh: 0.251,
      t_operate_days: 365,
      home_area_sqft: 2500,
      threshold_usd: 1990,
    },
    results: [
      {
        id: "B Mid",
        total_usd_per_year: "500.00",
        initial_usd_per_year: "0.00",
        maintenance_usd_per_year: "100.00",
        electricity_usd_per_year: "400.00",
        optimal_coverage_sqft: 300,
        normalization_multiplier: 8.3,
        shares: null,
        below_medical_threshold: true,
      },
      {
        id: "A Pricey",
        total_usd_per_year: "2000.00",
        initial_usd_per_year: "0.00",
        maintenance_usd_per_year: "1000.00",
        electricity_usd_per_year: "1000.00",
        optimal_coverage_sqft: 150,
        normalization_multiplier: 16.7,
        shares: null,
        below_medical_threshold: false,
      },
    ],
  };

  it("sorts by parsed totals, not string order", () => {
    const rows = buildRankingRows(response);
    const byTotal = sortRows(rows, { key: "total", ascending: false });
    expect(byTotal.map((r) => r.id)).toEqual(["A Pricey", "B Mid"]);
  });

  it("toggle flips direction on the same key and resets on a new key", () => {
    let sort: SortState = { key: "rank", ascending: true };
    sort = toggleSort(sort, "rank");
    expect(sort).toEqual({ key: "rank", ascending: false });
    sort = toggleSort(sort, "id");
    expect(sort).toEqual({ key: "id", ascending: true });
  });

  it("does not mutate its input", () => {
    const rows = buildRankingRows(response);
    const ids = rows.map((r) => r.id);
    sortRows(rows, { key: "id", ascending: true });
    expect(rows.map((r) => r.id)).toEqual(ids);
  });
});

describe("parseAqiCsv", () => {
  it("parses the wide shape", () => {
    const result = parseAqiCsv("region,days_over_100\nLos Angeles,57\nKings,110\n");
    expect(result.errors).toEqual([]);
    expect(result.calendars).toEqual([
      { region: "Los Angeles", payload: { days_over_threshold: 57 } },
      { region: "Kings", payload: { days_over_threshold: 110 } },
    ]);
  });

  it("parses the daily shape grouped by region", () => {
    const text =
      "region,date,aqi\nLA,2021-01-01,40\nLA,2021-01-02,140\nKings,2021-01-01,180\n";
    const result = parseAqiCsv(text);
    expect(result.errors).toEqual([]);
    expect(result.calendars).toHaveLength(2);
    expect(result.calendars[0].payload.daily).toHaveLength(2);
  });

  it("rejects duplicates and junk rows without dying", () => {
    const result = parseAqiCsv(
      "region,days_over_100\nLA,57\nLA,60\nNowhere,not-a-number\n",
    );
    expect(result.calendars).toHaveLength(1);
    expect(result.errors).toHaveLength(2);
  });

  it("flags an unknown header", () => {
    const result = parseAqiCsv("place,value\nLA,1\n");
    expect(result.calendars).toEqual([]);
    expect(result.errors[0]).toContain("unrecognized header");
  });
});
