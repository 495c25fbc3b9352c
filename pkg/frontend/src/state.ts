// Scenario state and its mapping onto the service's request shape.
// The request invariants (exactly one of region/rate, exactly one of
// days/calendar) are enforced structurally by the union types here.

import type { CalendarPayload, WhatIfRequest } from "./types.js";

export type Locale =
  | { kind: "region"; region: string }
  | { kind: "rate"; rate: number };

export type Schedule =
  | { kind: "continuous" }
  | { kind: "slider"; days: number }
  | { kind: "calendar"; payload: CalendarPayload; label: string };

export interface ScenarioState {
  homeSqft: number;
  locale: Locale;
  schedule: Schedule;
  mode: "full" | "table5";
  thresholdUsd: number;
}

export const CONTINUOUS_DAYS = 365;

export function defaultState(): ScenarioState {
  return {
    homeSqft: 2500,
    locale: { kind: "region", region: "CA" },
    schedule: { kind: "continuous" },
    mode: "table5",
    thresholdUsd: 1990,
  };
}

export function toRankRequest(state: ScenarioState): WhatIfRequest {
  const request: WhatIfRequest = {
    home_area_sqft: state.homeSqft,
    mode: state.mode,
    threshold_usd: state.thresholdUsd,
  };
  if (state.locale.kind === "region") {
    request.region = state.locale.region;
  } else {
    request.rate_usd_per_kwh = state.locale.rate;
  }
  switch (state.schedule.kind) {
    case "continuous":
      request.days = CONTINUOUS_DAYS;
      break;
    case "slider":
      request.days = clampDays(state.schedule.days);
      break;
    case "calendar":
      request.calendar = state.schedule.payload;
      break;
  }
  return request;
}

export function clampDays(days: number): number {
  if (!Number.isFinite(days)) return 0;
  return Math.min(365, Math.max(0, Math.round(days)));
}

export function scheduleSummary(schedule: Schedule): string {
  switch (schedule.kind) {
    case "continuous":
      return "continuous (365 days)";
    case "slider":
      return `${clampDays(schedule.days)} orange days`;
    case "calendar":
      return `calendar: ${schedule.label}`;
  }
}
