"""Evaluation quantities: traffic profiles plus fairness and occupancy metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .model import Schedule
from .timebase import ConfigurationError, RationalPeriod, Tick, TimeBase, period_ticks

#: As tmin shrinks the capacity bound diverges, so a run never offers more
#: than this many requests.
MAX_OFFERED = 100


@dataclass(frozen=True)
class TrafficProfile:
    """Request shape derived from an interval ratio and a load factor.

    rho = tmin/tmax in (0, 1); lam = average requested duration over the
    period. Tick durations round down, never below one tick; rounding down
    keeps the capacity bound an upper bound.
    """

    rho: Fraction
    lam: Fraction
    period: RationalPeriod
    tp_ticks: Tick
    tmin_ticks: Tick
    tmax_ticks: Tick

    @classmethod
    def from_params(cls, rho, lam, period: RationalPeriod, tb: TimeBase) -> "TrafficProfile":
        rho = Fraction(rho)
        lam = Fraction(lam)
        if not 0 < rho < 1:
            raise ConfigurationError(f"interval ratio must be in (0, 1), got {rho}")
        if lam <= 0:
            raise ConfigurationError(f"load factor must be positive, got {lam}")
        tp = period_ticks(period, tb)
        tmin = max(1, math.floor(2 * lam * rho / (1 + rho) * tp))
        tmax = math.floor(2 * lam / (1 + rho) * tp)
        if not tmin < tmax:
            raise ConfigurationError(
                f"profile rho={rho} lam={lam}: degenerate duration range "
                f"[{tmin}, {tmax}] at {tp} ticks per period"
            )
        if tmax > min(tp, tb.bi_ticks):
            raise ConfigurationError(
                f"profile rho={rho} lam={lam}: tmax={tmax} exceeds the period "
                f"or the beacon interval"
            )
        return cls(rho, lam, period, tp, tmin, tmax)

    @property
    def tavg_exact(self) -> Fraction:
        """Average requested duration in ticks, lam * tp, exact."""
        return self.lam * self.tp_ticks

    @property
    def tmin_exact(self) -> Fraction:
        """Unrounded minimum duration in ticks, 2*lam*rho/(1+rho) * tp."""
        return 2 * self.lam * self.rho / (1 + self.rho) * self.tp_ticks


@dataclass(frozen=True)
class MetricsReport:
    """Per-run summary emitted by the harness."""

    offered: int
    accepted: int
    acceptance_rate: float
    n_max: int
    jain_tblk: float
    jain_r: float
    mean_tblk_norm: Optional[float]
    occupancy: float
    o_min: float
    nu: Optional[float] = None


def n_max(profile: TrafficProfile) -> int:
    """Capacity bound: minimum-duration allocations fitting one period.

    Placement constraints are ignored; the exact (unrounded) minimum
    duration is used so the bound depends only on (rho, lam), not on the
    tick resolution. Capped at MAX_OFFERED.
    """
    bound = int(Fraction(profile.tp_ticks) / profile.tmin_exact)
    return min(bound, MAX_OFFERED)


def jain_index(values: Sequence[float]) -> float:
    """Fairness index (sum x)^2 / (n * sum x^2); 1 means all equal.

    By convention an empty list (no accepted allocations) and an all-zero
    list both report 1.0.
    """
    if not values:
        return 1.0
    sq = sum(float(v) * float(v) for v in values)
    if sq == 0:
        return 1.0
    total = sum(float(v) for v in values)
    return total * total / (len(values) * sq)


def variability(count_c1: int, count_c2: int) -> float:
    """min/max ratio of the two per-class accepted counts; 0 when both are 0."""
    if count_c1 < 0 or count_c2 < 0:
        raise ValueError("accepted counts must be non-negative")
    hi = max(count_c1, count_c2)
    if hi == 0:
        return 0.0
    return min(count_c1, count_c2) / hi


def bi_occupancy(s: Schedule) -> float:
    """Fraction of air time scheduled over one joint period."""
    return float(sum((Fraction(a.tblk, a.tp) for a in s.allocations), Fraction(0)))


def mean_tblk_norm(s: Schedule, tmax: Tick) -> Optional[float]:
    """Mean granted duration over accepted allocations, normalized by tmax.

    Undefined (None) when nothing was accepted.
    """
    if not s.allocations:
        return None
    return sum(a.tblk for a in s.allocations) / (len(s.allocations) * tmax)


def min_occupancy(profile: TrafficProfile) -> float:
    """Smallest occupancy one accepted request can take: tmin/tp in ticks."""
    return profile.tmin_ticks / profile.tp_ticks
