"""Exact integer-tick time arithmetic over beacon intervals.

All scheduling decisions operate on integer ticks (Python ints, so
arithmetic cannot silently overflow). Stream periods are rationals
constrained to an integer multiple or an integer fraction of the beacon
interval, which makes every period, and the joint period of any set of
streams, an exact tick count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Default ticks per beacon interval: lcm(1..12), so any period 1/q with
#: q <= 12 is an exact number of ticks.
DEFAULT_BI_TICKS = 27720

# Times and durations are plain ints counting the atomic simulation unit.
Tick = int


class ConfigurationError(ValueError):
    """Invalid run configuration, e.g. a period that does not divide the BI."""


@dataclass(frozen=True)
class RationalPeriod:
    """Stream period p = num/den in units of the beacon interval.

    At most one of ``num``, ``den`` may exceed 1: a period is either an
    integer multiple or an integer fraction of a beacon interval.
    """

    num: int
    den: int = 1

    def __post_init__(self):
        if self.num < 1 or self.den < 1:
            raise ValueError(f"period must be positive, got {self.num}/{self.den}")
        if self.num > 1 and self.den > 1:
            raise ValueError(
                "period must be an integer multiple or an integer fraction "
                f"of the beacon interval, got {self.num}/{self.den}"
            )

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class TimeBase:
    """Tick length of one beacon interval."""

    bi_ticks: Tick = DEFAULT_BI_TICKS

    def __post_init__(self):
        if self.bi_ticks <= 0:
            raise ConfigurationError(f"bi_ticks must be positive, got {self.bi_ticks}")


def period_ticks(p: RationalPeriod, tb: TimeBase) -> Tick:
    """Exact tick count of one period: (num/den) * bi_ticks.

    Raises ConfigurationError when bi_ticks is not divisible by the period
    denominator, since the period would not be an exact tick count.
    """
    if (p.num * tb.bi_ticks) % p.den != 0:
        raise ConfigurationError(
            f"bi_ticks={tb.bi_ticks} not divisible by period denominator {p.den}"
        )
    return p.num * tb.bi_ticks // p.den


def joint_period(periods: list[RationalPeriod], tb: TimeBase) -> Tick:
    """Tick count after which a set of periodic patterns jointly repeats.

    Computed exactly over the rationals, lcm(nums)/gcd(dens), then
    converted to ticks; equal to the lcm of the individual tick periods.
    """
    if not periods:
        raise ValueError("joint_period of an empty period list is undefined")
    num = 1
    den = 0  # gcd identity
    for p in periods:
        period_ticks(p, tb)  # validates divisibility
        num = math.lcm(num, p.num)
        den = math.gcd(den, p.den)
    return num * tb.bi_ticks // den
