// Display formatting. The service already rounds money to cents; nothing
// here recomputes costs.

export function formatMoney(value: string): string {
  const [whole, cents = "00"] = value.split(".");
  const negative = whole.startsWith("-");
  const digits = negative ? whole.slice(1) : whole;
  const grouped = digits.replace(/\B(?=(\d{3})+(?!\d))/g, ",");
  return `${negative ? "-" : ""}$${grouped}.${cents.padEnd(2, "0").slice(0, 2)}`;
}

export function formatPercent(share: number): string {
  return `${(share * 100).toFixed(1)}%`;
}

export function formatRate(usdPerKwh: number): string {
  return `${(usdPerKwh * 100).toFixed(1)} ¢/kWh`;
}
