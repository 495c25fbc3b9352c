import { describe, expect, it } from "vitest";

import { buildScatterModel, linearScale, ticks } from "../src/scatter.js";
import type { CatalogUnit } from "../src/types.js";

const FRAME = { width: 640, height: 360, pad: 40 };

function unit(id: string, coverage: number, price: string): CatalogUnit {
  return {
    id,
    brand: id.split(" ")[0],
    model: id.split(" ").slice(1).join(" "),
    model_year: null,
    initial_cost_usd: price,
    cadr_cfm: coverage / 1.5,
    rated_watts: 50,
    optimal_coverage_sqft: coverage,
    filter_plan: { kind: "annualized" },
  };
}

describe("linearScale", () => {
  it("maps domain endpoints to range endpoints", () => {
    const scale = linearScale(0, 10, 40, 600);
    expect(scale(0)).toBe(40);
    expect(scale(10)).toBe(600);
    expect(scale(5)).toBe(320);
  });

  it("degenerate domain maps to the range midpoint", () => {
    const scale = linearScale(3, 3, 0, 100);
    expect(scale(3)).toBe(50);
  });
});

describe("buildScatterModel", () => {
  it("single point draws no fitted line", () => {
    const model = buildScatterModel([unit("Solo Unit", 300, "150.00")], null, FRAME);
    expect(model.points).toHaveLength(1);
    expect(model.line).toBeNull();
    expect(model.r2Badge).toBeNull();
  });

  it("no line without a service-supplied fit even with many points", () => {
    const units = [unit("A One", 100, "100.00"), unit("B Two", 400, "410.00")];
    expect(buildScatterModel(units, null, FRAME).line).toBeNull();
  });

  it("perfect synthetic line gets an r-squared badge of 1.000", () => {
    const units = [
      unit("A One", 100, "100.00"),
      unit("B Two", 200, "200.00"),
      unit("C Three", 400, "400.00"),
    ];
    const model = buildScatterModel(units, { slope: 1, intercept: 0, r_squared: 1 }, FRAME);
    expect(model.r2Badge).toBe("R² = 1.000");
    expect(model.line).not.toBeNull();
  });

  it("line endpoints follow the displayed fit parameters exactly", () => {
    const units = [unit("A One", 0, "0.00"), unit("B Two", 100, "250.00")];
    const fit = { slope: 2, intercept: 10, r_squared: 0.9 };
    const model = buildScatterModel(units, fit, FRAME);
    const x = linearScale(0, 100, FRAME.pad, FRAME.width - FRAME.pad);
    const y = linearScale(0, 250, FRAME.height - FRAME.pad, FRAME.pad);
    expect(model.line).toEqual({
      x1: x(0),
      y1: y(10), // slope * 0 + 10
      x2: x(100),
      y2: y(210), // slope * 100 + 10
    });
  });

  it("plots one point per catalog unit at scaled coordinates", () => {
    const units = [unit("A One", 100, "100.00"), unit("B Two", 400, "410.00")];
    const model = buildScatterModel(units, null, FRAME);
    expect(model.points.map((p) => p.id)).toEqual(["A One", "B Two"]);
    // higher price plots higher on screen (smaller y)
    expect(model.points[1].cy).toBeLessThan(model.points[0].cy);
  });
});

describe("ticks", () => {
  it("spans the domain inclusively", () => {
    expect(ticks(0, 100, 5)).toEqual([0, 25, 50, 75, 100]);
  });

  it("degenerate domain yields a single tick", () => {
    expect(ticks(5, 5, 4)).toEqual([5]);
  });
});
