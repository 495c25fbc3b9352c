// DOM wiring. All computation lives server-side or in the pure modules;
// this file only moves values between controls, requests, and elements.

import { ApiError, fetchCatalog, fetchFit, fetchRates, postRank } from "./api.js";
import { parseAqiCsv } from "./calendar.js";
import { debounce } from "./debounce.js";
import { formatMoney, formatRate } from "./format.js";
import { buildScatterModel } from "./scatter.js";
import { LatestGate } from "./seq.js";
import { sortRows, toggleSort, type SortState } from "./sorting.js";
import {
  badgeText,
  buildRankingRows,
  type RankRow,
} from "./tablemodel.js";
import {
  clampDays,
  defaultState,
  scheduleSummary,
  toRankRequest,
  type ScenarioState,
} from "./state.js";
import type { CatalogUnit, FitResponse, RankResponse, RateEntry } from "./types.js";

const state: ScenarioState = defaultState();
let sort: SortState = { key: "rank", ascending: true };
let lastGood: RankResponse | null = null;
let lastRows: RankRow[] = [];
let selectedUnit: string | null = null;
const gate = new LatestGate();

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

async function boot(): Promise<void> {
  const [catalog, rates, fit] = await Promise.all([
    fetchCatalog(),
    fetchRates(),
    fetchFit(),
  ]);
  populateRegions(rates);
  renderScatter(catalog, fit);
  wireControls();
  refreshNow();
}

function populateRegions(rates: RateEntry[]): void {
  const select = $<HTMLSelectElement>("region-select");
  select.innerHTML = "";
  for (const entry of rates) {
    const option = document.createElement("option");
    option.value = entry.region;
    option.textContent = `${entry.name ?? entry.region} (${formatRate(entry.usd_per_kwh)})`;
    if (state.locale.kind === "region" && entry.region === state.locale.region) {
      option.selected = true;
    }
    select.appendChild(option);
  }
}

function wireControls(): void {
  const home = $<HTMLInputElement>("home-sqft");
  home.value = String(state.homeSqft);
  home.addEventListener("input", () => {
    const value = Number(home.value);
    if (Number.isFinite(value) && value > 0) {
      state.homeSqft = value;
      refresh();
    }
  });

  const regionRadio = $<HTMLInputElement>("locale-region");
  const rateRadio = $<HTMLInputElement>("locale-rate");
  const regionSelect = $<HTMLSelectElement>("region-select");
  const rateInput = $<HTMLInputElement>("rate-input");
  const syncLocale = () => {
    rateInput.disabled = !rateRadio.checked;
    regionSelect.disabled = !regionRadio.checked;
    if (regionRadio.checked) {
      state.locale = { kind: "region", region: regionSelect.value };
    } else {
      const rate = Number(rateInput.value);
      if (!Number.isFinite(rate) || rate <= 0) return;
      state.locale = { kind: "rate", rate };
    }
    refresh();
  };
  regionRadio.addEventListener("change", syncLocale);
  rateRadio.addEventListener("change", syncLocale);
  regionSelect.addEventListener("change", syncLocale);
  rateInput.addEventListener("input", syncLocale);

  const continuous = $<HTMLInputElement>("schedule-continuous");
  const sliderRadio = $<HTMLInputElement>("schedule-slider");
  const uploadRadio = $<HTMLInputElement>("schedule-upload");
  const slider = $<HTMLInputElement>("orange-days");
  const sliderValue = $("orange-days-value");
  const upload = $<HTMLInputElement>("calendar-file");
  const syncSchedule = () => {
    slider.disabled = !sliderRadio.checked;
    upload.disabled = !uploadRadio.checked;
    if (continuous.checked) {
      state.schedule = { kind: "continuous" };
      refresh();
    } else if (sliderRadio.checked) {
      const days = clampDays(Number(slider.value));
      sliderValue.textContent = String(days);
      state.schedule = { kind: "slider", days };
      refresh();
    }
    // upload schedule is applied when a file is chosen
  };
  continuous.addEventListener("change", syncSchedule);
  sliderRadio.addEventListener("change", syncSchedule);
  uploadRadio.addEventListener("change", syncSchedule);
  slider.addEventListener("input", syncSchedule);
  upload.addEventListener("change", async () => {
    const file = upload.files?.[0];
    if (!file) return;
    const parsed = parseAqiCsv(await file.text());
    if (parsed.calendars.length === 0) {
      showBanner(`calendar not usable: ${parsed.errors.join("; ")}`);
      return;
    }
    const first = parsed.calendars[0];
    state.schedule = {
      kind: "calendar",
      payload: first.payload,
      label: `${first.region} (${file.name})`,
    };
    refresh();
  });

  const modeFull = $<HTMLInputElement>("mode-full");
  const modeCompat = $<HTMLInputElement>("mode-table5");
  (state.mode === "full" ? modeFull : modeCompat).checked = true;
  const syncMode = () => {
    state.mode = modeFull.checked ? "full" : "table5";
    refresh();
  };
  modeFull.addEventListener("change", syncMode);
  modeCompat.addEventListener("change", syncMode);

  const threshold = $<HTMLInputElement>("threshold-usd");
  threshold.value = String(state.thresholdUsd);
  threshold.addEventListener("input", () => {
    const value = Number(threshold.value);
    if (Number.isFinite(value) && value > 0) {
      state.thresholdUsd = value;
      refresh();
    }
  });

  for (const th of document.querySelectorAll<HTMLTableCellElement>("th[data-sort]")) {
    th.addEventListener("click", () => {
      sort = toggleSort(sort, th.dataset.sort as SortState["key"]);
      renderTable();
    });
  }
}

// exactly one rank request per burst of state changes
const refresh = debounce(refreshNow, 150);

function refreshNow(): void {
  const seq = gate.next();
  postRank(toRankRequest(state))
    .then((response) => {
      if (!gate.isCurrent(seq)) return; // stale response, a newer request is in flight
      lastGood = response;
      hideBanner();
      $("scenario-summary").textContent = summarize(response);
      renderTable();
    })
    .catch((err: unknown) => {
      if (!gate.isCurrent(seq)) return;
      const message =
        err instanceof ApiError ? `service error ${err.status}: ${err.message}` : String(err);
      showBanner(message);
      markStale();
    });
}

function summarize(response: RankResponse): string {
  const s = response.scenario;
  const where =
    s.region !== null ? `${s.region} (${formatRate(s.rate_usd_per_kwh)})` : formatRate(s.rate_usd_per_kwh);
  return (
    `${where} · ${scheduleSummary(state.schedule)} · ${s.home_area_sqft} ft² · ` +
    `${s.mode} mode · reference line $${s.threshold_usd}/yr`
  );
}

function renderTable(): void {
  if (!lastGood) return;
  lastRows = sortRows(buildRankingRows(lastGood), sort);
  const tbody = $("ranking-body");
  tbody.innerHTML = "";
  for (const row of lastRows) {
    const tr = document.createElement("tr");
    tr.className = row.id === selectedUnit ? "selected" : "";
    tr.innerHTML =
      `<td>${row.rank}</td>` +
      `<td class="unit">${escapeHtml(row.id)}</td>` +
      `<td class="money">${row.total}</td>` +
      `<td>${barHtml(row)}</td>` +
      `<td><span class="badge ${row.belowThreshold ? "ok" : "warn"}">` +
      `${badgeText(row, lastGood.scenario.threshold_usd)}</span></td>`;
    tr.addEventListener("click", () => {
      selectedUnit = row.id;
      renderBreakdown(row);
      renderTable();
    });
    tbody.appendChild(tr);
  }
  $("table-state").textContent = "";
}

function barHtml(row: RankRow): string {
  if (row.segments.length === 0) return '<span class="muted">no cost</span>';
  const segments = row.segments
    .map(
      (seg) =>
        `<span class="seg seg-${seg.key}" style="width:${seg.widthPct}%" title="${seg.key} ${seg.label}"></span>`,
    )
    .join("");
  return `<span class="bar">${segments}</span>`;
}

function renderBreakdown(row: RankRow): void {
  const panel = $("breakdown");
  const legend = row.segments
    .map(
      (seg) =>
        `<span class="legend-item"><span class="swatch seg-${seg.key}"></span>` +
        `${seg.key} ${seg.label}</span>`,
    )
    .join(" ");
  panel.innerHTML =
    `<h3>${escapeHtml(row.id)}</h3>` +
    `<p>${row.total} per year · purchase ${row.initial} · filters ${row.maintenance} · ` +
    `electricity ${row.electricity}</p>` +
    `<div class="bar big">${barHtml(row)}</div><p>${legend}</p>`;
}

function renderScatter(catalog: CatalogUnit[], fit: FitResponse): void {
  const frame = { width: 640, height: 360, pad: 40 };
  const params = fit.fits ? fit.fits[fit.display_orientation] : null;
  const model = buildScatterModel(catalog, params, frame);
  const svg = $("scatter");
  const circles = model.points
    .map(
      (p) =>
        `<circle cx="${p.cx.toFixed(1)}" cy="${p.cy.toFixed(1)}" r="4">` +
        `<title>${escapeHtml(p.id)}: ${p.coverage} ft², ${formatMoney(p.price.toFixed(2))}</title></circle>`,
    )
    .join("");
  const line = model.line
    ? `<line class="fit" x1="${model.line.x1.toFixed(1)}" y1="${model.line.y1.toFixed(1)}" ` +
      `x2="${model.line.x2.toFixed(1)}" y2="${model.line.y2.toFixed(1)}"/>`
    : "";
  svg.innerHTML = circles + line;
  $("r2-badge").textContent = model.r2Badge ?? "";
}

function showBanner(message: string): void {
  const banner = $("error-banner");
  banner.textContent = message;
  banner.classList.remove("hidden");
}

function hideBanner(): void {
  $("error-banner").classList.add("hidden");
}

function markStale(): void {
  if (lastGood) {
    $("table-state").textContent = "showing stale results from the last successful request";
  }
}

function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

boot().catch((err) => showBanner(`failed to load: ${String(err)}`));
