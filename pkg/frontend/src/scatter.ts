// Geometry for the price-vs-coverage scatter plot. Pure: SVG coordinates in,
// SVG coordinates out; the fitted line comes from the service.

import type { CatalogUnit, FitParams } from "./types.js";

export interface ScatterPoint {
  id: string;
  cx: number;
  cy: number;
  coverage: number;
  price: number;
}

export interface LineSegment {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface ScatterModel {
  points: ScatterPoint[];
  line: LineSegment | null;
  r2Badge: string | null;
  xTicks: { pos: number; label: string }[];
  yTicks: { pos: number; label: string }[];
}

export interface Frame {
  width: number;
  height: number;
  pad: number;
}

export function linearScale(
  domainMin: number,
  domainMax: number,
  rangeMin: number,
  rangeMax: number,
): (value: number) => number {
  const span = domainMax - domainMin;
  if (span === 0) {
    const mid = (rangeMin + rangeMax) / 2;
    return () => mid;
  }
  return (value) =>
    rangeMin + ((value - domainMin) / span) * (rangeMax - rangeMin);
}

export function buildScatterModel(
  units: CatalogUnit[],
  fit: FitParams | null,
  frame: Frame,
): ScatterModel {
  const coverages = units.map((u) => u.optimal_coverage_sqft);
  const prices = units.map((u) => parseFloat(u.initial_cost_usd));
  const xMin = Math.min(...coverages, 0);
  const xMax = Math.max(...coverages, 1);
  const yMin = Math.min(...prices, 0);
  const yMax = Math.max(...prices, 1);
  const x = linearScale(xMin, xMax, frame.pad, frame.width - frame.pad);
  const y = linearScale(yMin, yMax, frame.height - frame.pad, frame.pad);

  const points = units.map((u, i) => ({
    id: u.id,
    cx: x(u.optimal_coverage_sqft),
    cy: y(prices[i]),
    coverage: u.optimal_coverage_sqft,
    price: prices[i],
  }));

  // a fitted line needs at least two points and a service-supplied fit
  let line: LineSegment | null = null;
  let r2Badge: string | null = null;
  if (fit !== null && units.length >= 2) {
    line = {
      x1: x(xMin),
      y1: y(fit.slope * xMin + fit.intercept),
      x2: x(xMax),
      y2: y(fit.slope * xMax + fit.intercept),
    };
    r2Badge = `R² = ${fit.r_squared.toFixed(3)}`;
  }

  const xTicks = ticks(xMin, xMax, 5).map((v) => ({
    pos: x(v),
    label: v.toFixed(0),
  }));
  const yTicks = ticks(yMin, yMax, 5).map((v) => ({
    pos: y(v),
    label: `$${v.toFixed(0)}`,
  }));
  return { points, line, r2Badge, xTicks, yTicks };
}

export function ticks(min: number, max: number, count: number): number[] {
  if (max <= min) return [min];
  const step = (max - min) / (count - 1);
  return Array.from({ length: count }, (_, i) => min + i * step);
}
