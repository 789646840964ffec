"""Domain objects: requests, allocations, blocks, schedules.

Blocks are half-open tick intervals [start, end): two blocks touching
end-to-start do not overlap. A block must lie inside a single beacon
interval, checked exactly as start // bi == (end - 1) // bi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .timebase import RationalPeriod, Tick, TimeBase, period_ticks


@dataclass(frozen=True)
class AllocationRequest:
    """A stream's demand: periodicity plus admissible duration range."""

    id: str
    period: RationalPeriod
    tmin: Tick
    tmax: Tick
    class_label: Optional[str] = None


@dataclass(frozen=True)
class Allocation:
    """An accepted periodic reservation.

    Blocks occupy [t_start + k*tp, t_start + k*tp + tblk) for k = 0, 1, ...
    The original duration range [tmin, tmax] is kept so the duration ratio
    stays recoverable after later admissions shrink tblk.
    """

    id: str
    t_start: Tick
    tp: Tick
    tblk: Tick
    tmin: Tick
    tmax: Tick


@dataclass(frozen=True)
class Block:
    """Half-open interval [start, end) of occupied ticks."""

    start: Tick
    end: Tick

    def __post_init__(self):
        if self.start >= self.end:
            raise ValueError(f"empty or inverted block [{self.start}, {self.end})")


@dataclass(frozen=True)
class ScheduleViolation:
    """First constraint violation found by validate_schedule."""

    kind: str  # "duration-range" | "bi-crossing" | "overlap"
    message: str


def duration_ratio(a: Allocation) -> Fraction:
    """Position of tblk within [tmin, tmax]: 0 at tmin, 1 at tmax, exact."""
    return Fraction(a.tblk - a.tmin, a.tmax - a.tmin)


def validate_request(req: AllocationRequest, tb: TimeBase) -> Tick:
    """Check request invariants against a time base; returns the period in ticks.

    tmin == tmax is rejected: such a request leaves no duration range to
    adapt, and the duration ratio would be undefined.
    """
    tp = period_ticks(req.period, tb)
    if not 0 < req.tmin < req.tmax:
        raise ValueError(
            f"request {req.id!r}: need 0 < tmin < tmax, got [{req.tmin}, {req.tmax}]"
        )
    if req.tmax > tp:
        raise ValueError(
            f"request {req.id!r}: tmax={req.tmax} exceeds period ({tp} ticks)"
        )
    if req.tmax > tb.bi_ticks:
        raise ValueError(
            f"request {req.id!r}: tmax={req.tmax} exceeds beacon interval "
            f"({tb.bi_ticks} ticks)"
        )
    return tp


def expand_blocks(a: Allocation, horizon: Tick) -> list[Block]:
    """All blocks of ``a`` with start before ``horizon``, in time order."""
    if horizon <= 0:
        raise ValueError(f"horizon must be positive, got {horizon}")
    out = []
    t = a.t_start
    while t < horizon:
        out.append(Block(t, t + a.tblk))
        t += a.tp
    return out


class Schedule:
    """The set of accepted allocations, in admission order.

    Mutated by exactly one scheduler at a time; admission order is
    preserved and allocation ids are unique.
    """

    def __init__(self, time_base: TimeBase, allocations=()):
        self.time_base = time_base
        self.allocations: list[Allocation] = []
        for a in allocations:
            self.add(a)

    @property
    def joint_period_ticks(self) -> Tick:
        """lcm of member periods in ticks; one beacon interval when empty."""
        if not self.allocations:
            return self.time_base.bi_ticks
        return math.lcm(*(a.tp for a in self.allocations))

    def add(self, a: Allocation) -> None:
        if any(existing.id == a.id for existing in self.allocations):
            raise ValueError(f"duplicate allocation id {a.id!r}")
        self.allocations.append(a)

    def copy(self) -> "Schedule":
        dup = Schedule(self.time_base)
        dup.allocations = list(self.allocations)
        return dup

    def __len__(self) -> int:
        return len(self.allocations)


def validate_schedule(s: Schedule) -> Optional[ScheduleViolation]:
    """Check a schedule's structural constraints; None means valid.

    Over one repetition of the combined pattern: every allocation's tblk in
    [tmin, tmax], no block crosses a beacon-interval boundary, and no two
    blocks overlap. Violations are data, not faults; the first one found is
    returned.
    """
    bi = s.time_base.bi_ticks
    for a in s.allocations:
        if not a.tmin <= a.tblk <= a.tmax:
            return ScheduleViolation(
                "duration-range",
                f"allocation {a.id!r}: tblk={a.tblk} outside [{a.tmin}, {a.tmax}]",
            )
    # The combined pattern repeats every lcm(joint period, bi) ticks. A block
    # crossing that seam also crosses a BI boundary, so the containment check
    # below catches every seam case before the overlap scan could miss it.
    horizon = math.lcm(s.joint_period_ticks, bi)
    blocks = []
    for a in s.allocations:
        for b in expand_blocks(a, horizon):
            if b.start // bi != (b.end - 1) // bi:
                return ScheduleViolation(
                    "bi-crossing",
                    f"allocation {a.id!r}: block [{b.start}, {b.end}) crosses the "
                    f"beacon-interval boundary at {(b.start // bi + 1) * bi}",
                )
            blocks.append((b.start, b.end, a.id))
    blocks.sort()
    for (s0, e0, id0), (s1, e1, id1) in zip(blocks, blocks[1:]):
        if e0 > s1:
            return ScheduleViolation(
                "overlap",
                f"blocks [{s0}, {e0}) of {id0!r} and [{s1}, {e1}) of {id1!r} overlap",
            )
    return None


def schedule_to_doc(s: Schedule) -> dict:
    """Canonical JSON document for a schedule (the `schedule` CLI output)."""
    return {
        "bi_ticks": s.time_base.bi_ticks,
        "allocations": [
            {
                "id": a.id,
                "t_start": a.t_start,
                "tp": a.tp,
                "tblk": a.tblk,
                "tmin": a.tmin,
                "tmax": a.tmax,
            }
            for a in s.allocations
        ],
    }
