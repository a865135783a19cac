"""Half-away-from-zero rounding – the integer convention of point prompts on the wire."""

from decimal import Decimal, ROUND_HALF_UP


def round_half_away(value):
    return int(Decimal(value).to_integral_value(rounding=ROUND_HALF_UP))


def clamp(value, lo, hi):
    return max(lo, min(hi, value))
