// Wire types mirroring the service's pydantic models.

export interface CalendarPayload {
  days_over_threshold?: number;
  daily?: { date: string; aqi: number }[];
}

export interface WhatIfRequest {
  region?: string;
  rate_usd_per_kwh?: number;
  days?: number;
  calendar?: CalendarPayload;
  home_area_sqft: number;
  mode: "full" | "table5";
  threshold_usd: number;
  units?: string[];
}

export interface Shares {
  initial: number;
  maintenance: number;
  electricity: number;
}

export interface PcyPayload {
  id: string;
  total_usd_per_year: string;
  initial_usd_per_year: string;
  maintenance_usd_per_year: string;
  electricity_usd_per_year: string;
  optimal_coverage_sqft: number;
  normalization_multiplier: number;
  shares: Shares | null;
  below_medical_threshold: boolean;
}

export interface ScenarioEcho {
  mode: "full" | "table5";
  region: string | null;
  rate_usd_per_kwh: number;
  t_operate_days: number;
  home_area_sqft: number;
  threshold_usd: number;
}

export interface RankResponse {
  scenario: ScenarioEcho;
  results: PcyPayload[];
}

export interface CatalogUnit {
  id: string;
  brand: string;
  model: string;
  model_year: number | null;
  initial_cost_usd: string;
  cadr_cfm: number;
  rated_watts: number;
  optimal_coverage_sqft: number;
  filter_plan: Record<string, unknown>;
}

export interface RateEntry {
  region: string;
  usd_per_kwh: number;
  name: string | null;
}

export interface FitParams {
  slope: number;
  intercept: number;
  r_squared: number;
}

export interface FitResponse {
  n: number;
  display_orientation: string;
  fits: Record<string, FitParams> | null;
}
