// Client-side ordering of ranking rows. Comparison only; values come from
// the service untouched.

import type { RankRow } from "./tablemodel.js";

export type SortKey = "rank" | "id" | "total" | "coverage";

export interface SortState {
  key: SortKey;
  ascending: boolean;
}

export function toggleSort(current: SortState, key: SortKey): SortState {
  if (current.key === key) {
    return { key, ascending: !current.ascending };
  }
  return { key, ascending: true };
}

export function sortRows(rows: RankRow[], sort: SortState): RankRow[] {
  const direction = sort.ascending ? 1 : -1;
  const sorted = [...rows].sort((a, b) => direction * compare(a, b, sort.key));
  return sorted;
}

function compare(a: RankRow, b: RankRow, key: SortKey): number {
  switch (key) {
    case "rank":
      return a.rank - b.rank;
    case "id":
      return a.id.localeCompare(b.id);
    case "total":
      return parseFloat(a.totalRaw) - parseFloat(b.totalRaw);
    case "coverage":
      return a.coverageSqft - b.coverageSqft;
  }
}
