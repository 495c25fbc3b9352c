// Typed fetch wrappers for the service endpoints.

import type {
  CatalogUnit,
  FitResponse,
  RankResponse,
  RateEntry,
  WhatIfRequest,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

async function getJson<T>(path: string): Promise<T> {
  const resp = await fetch(path);
  if (!resp.ok) throw new ApiError(resp.status, await errorText(resp));
  return (await resp.json()) as T;
}

async function errorText(resp: Response): Promise<string> {
  try {
    const body = await resp.json();
    return typeof body.detail === "string" ? body.detail : JSON.stringify(body.detail);
  } catch {
    return resp.statusText;
  }
}

export function fetchCatalog(): Promise<CatalogUnit[]> {
  return getJson("/api/catalog");
}

export function fetchRates(): Promise<RateEntry[]> {
  return getJson("/api/rates");
}

export function fetchFit(): Promise<FitResponse> {
  return getJson("/api/fit");
}

export async function postRank(request: WhatIfRequest): Promise<RankResponse> {
  const resp = await fetch("/api/rank", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(request),
  });
  if (!resp.ok) throw new ApiError(resp.status, await errorText(resp));
  return (await resp.json()) as RankResponse;
}
