"""Currency rounding and formatting.

Costs are carried as floats internally; rounding to cents happens only at
presentation, half-up (so 0.005 rounds to 0.01, never banker's rounding).
"""

from decimal import Decimal, ROUND_HALF_UP


def round_cents(value: float) -> float:
    """Round a dollar amount to cents, half-up."""
    return float(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def usd(value: float) -> str:
    """Format a dollar amount with exactly two decimals, half-up."""
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))
