import { describe, expect, it } from "vitest";

import {
  clampDays,
  defaultState,
  scheduleSummary,
  toRankRequest,
  type Locale,
  type Schedule,
} from "../src/state.js";

describe("defaultState", () => {
  it("matches the documented defaults", () => {
    const state = defaultState();
    expect(state.homeSqft).toBe(2500);
    expect(state.locale).toEqual({ kind: "region", region: "CA" });
    expect(state.schedule).toEqual({ kind: "continuous" });
    expect(state.mode).toBe("table5");
    expect(state.thresholdUsd).toBe(1990);
  });

  it("maps onto the published default scenario request", () => {
    const request = toRankRequest(defaultState());
    expect(request).toEqual({
      region: "CA",
      days: 365,
      home_area_sqft: 2500,
      mode: "table5",
      threshold_usd: 1990,
    });
  });
});

describe("toRankRequest invariants", () => {
  const locales: Locale[] = [
    { kind: "region", region: "TX" },
    { kind: "rate", rate: 0.173 },
  ];
  const schedules: Schedule[] = [
    { kind: "continuous" },
    { kind: "slider", days: 57 },
    { kind: "calendar", payload: { days_over_threshold: 110 }, label: "Kings" },
    {
      kind: "calendar",
      payload: { daily: [{ date: "2021-01-01", aqi: 150 }] },
      label: "daily",
    },
  ];

  for (const locale of locales) {
    for (const schedule of schedules) {
      it(`sets exactly one of region/rate and days/calendar (${locale.kind}, ${schedule.kind})`, () => {
        const request = toRankRequest({ ...defaultState(), locale, schedule });
        expect(request.region !== undefined).toBe(locale.kind === "region");
        expect(request.rate_usd_per_kwh !== undefined).toBe(locale.kind === "rate");
        expect(request.days !== undefined).toBe(schedule.kind !== "calendar");
        expect(request.calendar !== undefined).toBe(schedule.kind === "calendar");
      });
    }
  }

  it("sends the slider day count", () => {
    const request = toRankRequest({
      ...defaultState(),
      schedule: { kind: "slider", days: 0 },
    });
    expect(request.days).toBe(0);
  });

  it("sends home size changes through untouched", () => {
    const request = toRankRequest({ ...defaultState(), homeSqft: 5000 });
    expect(request.home_area_sqft).toBe(5000);
  });
});

describe("clampDays", () => {
  it("clamps into 0..365 and rounds", () => {
    expect(clampDays(-5)).toBe(0);
    expect(clampDays(366)).toBe(365);
    expect(clampDays(56.7)).toBe(57);
    expect(clampDays(Number.NaN)).toBe(0);
  });
});

describe("scheduleSummary", () => {
  it("labels each schedule kind", () => {
    expect(scheduleSummary({ kind: "continuous" })).toContain("365");
    expect(scheduleSummary({ kind: "slider", days: 57 })).toContain("57");
    expect(
      scheduleSummary({ kind: "calendar", payload: {}, label: "LA.csv" }),
    ).toContain("LA.csv");
  });
});
