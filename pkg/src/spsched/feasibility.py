"""Earliest feasible start, right boundaries, and feasible-interval lists.

The search walks candidate start times forward from the window start. At
each position the candidate's blocks are expanded over one repetition of
the combined pattern; the first block that overlaps an existing block, or
that crosses a beacon-interval boundary, yields a shift that jumps the
start just past the obstruction. Beacon-interval boundaries are treated as
virtual obstructions so one loop handles both constraints. A position with
no obstruction is the earliest feasible start; the search rejects once a
first block could no longer end inside the window (block end <= t_max is
admissible).
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Optional

from .model import Schedule
from .timebase import Tick

_INF = float("inf")


@dataclass(frozen=True)
class SearchWindow:
    """Tick window [t_min, t_max] in which a first block may be placed."""

    t_min: Tick
    t_max: Tick

    def __post_init__(self):
        if not 0 <= self.t_min < self.t_max:
            raise ValueError(f"invalid search window [{self.t_min}, {self.t_max}]")


@dataclass(frozen=True)
class FeasibleInterval:
    """Maximal window [t_feas, t_lim] that can host a candidate's first block."""

    t_feas: Tick
    t_lim: Tick

    @property
    def length(self) -> Tick:
        return self.t_lim - self.t_feas


def _entries(s: Schedule) -> list[tuple[Tick, Tick, Tick]]:
    return [(a.t_start, a.tp, a.tblk) for a in s.allocations]


def _expanded(entries, horizon) -> tuple[list[Tick], list[Tick]]:
    """Parallel sorted (starts, ends) of all blocks starting before horizon."""
    blocks = []
    for t0, tp, tblk in entries:
        t = t0
        while t < horizon:
            blocks.append((t, t + tblk))
            t += tp
    blocks.sort()
    return [b[0] for b in blocks], [b[1] for b in blocks]


def _pattern_horizon(bi: Tick, tps) -> Tick:
    """Repetition length of the combined pattern, BI structure included."""
    return math.lcm(bi, *tps) if tps else bi


def _earliest_start(starts, ends, bi, tp, tblk, t_min, t_max, horizon) -> Optional[Tick]:
    """Shift-based search over prebuilt sorted block arrays."""
    nblocks = horizon // tp
    t = t_min
    while t + tblk <= t_max:
        shift = None
        for k in range(nblocks):
            s = t + k * tp
            e = s + tblk
            # earliest existing block overlapping [s, e), if any
            i = bisect_right(starts, s) - 1
            if i >= 0 and ends[i] > s:
                shift = ends[i] - s
                break
            if i + 1 < len(starts) and starts[i + 1] < e:
                shift = ends[i + 1] - s
                break
            if s // bi != (e - 1) // bi:  # crosses a BI boundary
                shift = (s // bi + 1) * bi - s
                break
        if shift is None:
            return t
        t += shift
    return None


def _boundary(starts, bi, tp, tblk, t_start, nblocks, extra=None) -> Tick:
    """Right boundary for a feasibly placed candidate.

    For every block, the nearest obstruction ahead of its end is the next
    block start (of any allocation, the candidate's own periodic repetition
    included) or the end of the enclosing beacon interval. ``extra``
    optionally supplies one more periodic obstruction (start0, period).
    """
    gap = _INF
    for k in range(nblocks):
        s = t_start + k * tp
        e = s + tblk
        j = bisect_left(starts, e)
        nxt = starts[j] if j < len(starts) else _INF
        nxt = min(nxt, (s // bi + 1) * bi, s + tp)
        if extra is not None:
            x0, xp = extra
            h = (e - x0 + xp - 1) // xp
            if h < 0:
                h = 0
            nxt = min(nxt, x0 + h * xp)
        gap = min(gap, nxt - e)
    return t_start + tblk + int(gap)


def feasibility_check(
    existing: Schedule, tp: Tick, tblk: Tick, window: SearchWindow
) -> Optional[Tick]:
    """Earliest feasible start for a (tp, tblk) candidate, or None.

    Existing allocations are frozen at their current durations; only the
    candidate's start moves. ``tp`` is the candidate period in ticks.
    """
    if tblk <= 0:
        raise ValueError(f"tblk must be positive, got {tblk}")
    if tblk > tp:
        raise ValueError(f"tblk={tblk} exceeds the candidate period {tp}")
    bi = existing.time_base.bi_ticks
    entries = _entries(existing)
    horizon = _pattern_horizon(bi, [tp] + [e[1] for e in entries])
    starts, ends = _expanded(entries, window.t_max + horizon)
    return _earliest_start(starts, ends, bi, tp, tblk, window.t_min, window.t_max, horizon)


def right_boundary(existing: Schedule, tp: Tick, tblk: Tick, t_start: Tick) -> Tick:
    """Largest t_lim such that the first block may sit anywhere in [t_start, t_lim].

    The placement at ``t_start`` must already be feasible.
    """
    bi = existing.time_base.bi_ticks
    entries = _entries(existing)
    horizon = _pattern_horizon(bi, [tp] + [e[1] for e in entries])
    starts, _ = _expanded(entries, t_start + 2 * horizon + bi)
    return _boundary(starts, bi, tp, tblk, t_start, horizon // tp)


def enumerate_feasible_intervals(
    existing: Schedule, tp: Tick, tblk: Tick, window: Optional[SearchWindow] = None
) -> list[FeasibleInterval]:
    """All feasible intervals for a (tp, tblk) candidate, disjoint and sorted.

    The search restarts after each interval at its right boundary and stops
    at the first infeasible restart. The default window is [0, tp): a new
    allocation starts within one period of the BI start.
    """
    if window is None:
        window = SearchWindow(0, tp)
    bi = existing.time_base.bi_ticks
    entries = _entries(existing)
    horizon = _pattern_horizon(bi, [tp] + [e[1] for e in entries])
    starts, ends = _expanded(entries, window.t_max + 2 * horizon + bi)
    nblocks = horizon // tp
    out: list[FeasibleInterval] = []
    cur = window.t_min
    while cur < window.t_max:
        t = _earliest_start(starts, ends, bi, tp, tblk, cur, window.t_max, horizon)
        if t is None:
            break
        lim = _boundary(starts, bi, tp, tblk, t, nblocks)
        out.append(FeasibleInterval(t, lim))
        cur = lim
    return out
