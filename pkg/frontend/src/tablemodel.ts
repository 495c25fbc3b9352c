// View-model for the ranking table: display strings, share-bar segment
// widths, and the threshold badge, all derived from service responses.

import { formatMoney, formatPercent } from "./format.js";
import type { PcyPayload, RankResponse } from "./types.js";

export interface BarSegment {
  key: "initial" | "maintenance" | "electricity";
  widthPct: number; // exact share * 100, used for segment width
  label: string; // share rounded for display
}

export interface RankRow {
  rank: number;
  id: string;
  total: string; // e.g. "$660.99"
  totalRaw: string; // service string, e.g. "660.99"
  initial: string;
  maintenance: string;
  electricity: string;
  coverageSqft: number;
  belowThreshold: boolean;
  segments: BarSegment[];
}

export function buildRankingRows(response: RankResponse): RankRow[] {
  return response.results.map((item, index) => ({
    rank: index + 1,
    id: item.id,
    total: formatMoney(item.total_usd_per_year),
    totalRaw: item.total_usd_per_year,
    initial: formatMoney(item.initial_usd_per_year),
    maintenance: formatMoney(item.maintenance_usd_per_year),
    electricity: formatMoney(item.electricity_usd_per_year),
    coverageSqft: item.optimal_coverage_sqft,
    belowThreshold: item.below_medical_threshold,
    segments: shareSegments(item),
  }));
}

export function shareSegments(item: PcyPayload): BarSegment[] {
  if (!item.shares) return [];
  const entries: [BarSegment["key"], number][] = [
    ["initial", item.shares.initial],
    ["maintenance", item.shares.maintenance],
    ["electricity", item.shares.electricity],
  ];
  // zero-width segments are dropped; the remaining widths still total 100%
  return entries
    .filter(([, share]) => share > 0)
    .map(([key, share]) => ({
      key,
      widthPct: share * 100,
      label: formatPercent(share),
    }));
}

export function badgeText(row: RankRow, thresholdUsd: number): string {
  return row.belowThreshold
    ? `under $${thresholdUsd}/yr`
    : `over $${thresholdUsd}/yr`;
}
