import { describe, expect, it } from "vitest";

import { badgeText, buildRankingRows, shareSegments } from "../src/tablemodel.js";
import type { PcyPayload, RankResponse } from "../src/types.js";

function payload(overrides: Partial<PcyPayload>): PcyPayload {
  return {
    id: "Acme One",
    total_usd_per_year: "100.00",
    initial_usd_per_year: "10.00",
    maintenance_usd_per_year: "40.00",
    electricity_usd_per_year: "50.00",
    optimal_coverage_sqft: 300,
    normalization_multiplier: 8.333,
    shares: { initial: 0.1, maintenance: 0.4, electricity: 0.5 },
    below_medical_threshold: true,
    ...overrides,
  };
}

// Values the service returns for the default scenario (region CA, 365 days,
// table5 mode); the Python service tests pin the same numbers.
const DEFAULT_RESPONSE: RankResponse = {
  scenario: {
    mode: "table5",
    region: "CA",
    rate_usd_per_kwh: 0.251,
    t_operate_days: 365,
    home_area_sqft: 2500,
    threshold_usd: 1990,
  },
  results: [
    payload({
      id: "Medify MA-112",
      total_usd_per_year: "660.99",
      maintenance_usd_per_year: "167.89",
      electricity_usd_per_year: "208.88",
      initial_usd_per_year: "0.00",
      optimal_coverage_sqft: 1425,
      shares: { initial: 0.1364, maintenance: 0.3848, electricity: 0.4788 },
    }),
    payload({
      id: "Blueair Pure 311 Auto",
      total_usd_per_year: "789.53",
      optimal_coverage_sqft: 375,
    }),
    payload({
      id: "IQAir Atem Car",
      total_usd_per_year: "11079.74",
      below_medical_threshold: false,
    }),
  ],
};

describe("buildRankingRows", () => {
  it("top-ranked default row is the Medify MA-112 within a cent of $661.00", () => {
    const rows = buildRankingRows(DEFAULT_RESPONSE);
    expect(rows[0].id).toBe("Medify MA-112");
    expect(rows[0].total).toBe("$660.99");
    expect(Math.abs(parseFloat(rows[0].totalRaw) - 661.0)).toBeLessThanOrEqual(0.01);
  });

  it("shows exactly the service's 2-decimal strings", () => {
    const rows = buildRankingRows(DEFAULT_RESPONSE);
    for (const [row, item] of rows.map((r, i) => [r, DEFAULT_RESPONSE.results[i]] as const)) {
      expect(row.totalRaw).toBe(item.total_usd_per_year);
      expect(row.total).toBe(
        "$" + item.total_usd_per_year.replace(/\B(?=(\d{3})+(?!\d))/g, ","),
      );
    }
  });

  it("ranks in response order", () => {
    const rows = buildRankingRows(DEFAULT_RESPONSE);
    expect(rows.map((r) => r.rank)).toEqual([1, 2, 3]);
  });

  it("renders an all-zero scenario as $0.00 rows", () => {
    const zeroed: RankResponse = {
      ...DEFAULT_RESPONSE,
      results: DEFAULT_RESPONSE.results.map((r) => ({
        ...r,
        total_usd_per_year: "0.00",
        shares: null,
      })),
    };
    for (const row of buildRankingRows(zeroed)) {
      expect(row.total).toBe("$0.00");
      expect(row.segments).toEqual([]);
    }
  });
});

describe("shareSegments", () => {
  it("widths always total 100%", () => {
    const segments = shareSegments(payload({}));
    const total = segments.reduce((sum, seg) => sum + seg.widthPct, 0);
    expect(total).toBeCloseTo(100, 6);
  });

  it("drops zero-width segments (two-segment bar for a zero-electricity unit)", () => {
    const segments = shareSegments(
      payload({ shares: { initial: 0.3, maintenance: 0.7, electricity: 0 } }),
    );
    expect(segments.map((s) => s.key)).toEqual(["initial", "maintenance"]);
    expect(segments.reduce((sum, seg) => sum + seg.widthPct, 0)).toBeCloseTo(100, 6);
  });

  it("matches the published cost split for the Coway Airmega 250", () => {
    const segments = shareSegments(
      payload({ shares: { initial: 0.1447, maintenance: 0.1883, electricity: 0.667 } }),
    );
    expect(segments[0].label).toBe("14.5%");
  });
});

describe("badgeText", () => {
  it("uses the scenario threshold", () => {
    const rows = buildRankingRows(DEFAULT_RESPONSE);
    expect(badgeText(rows[0], 1990)).toBe("under $1990/yr");
    expect(badgeText(rows[2], 1990)).toBe("over $1990/yr");
  });
});
