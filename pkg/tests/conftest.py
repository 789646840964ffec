"""Shared helpers: independent tick-scan validity and random request streams."""

from __future__ import annotations

import math
import random

from spsched import AllocationRequest, RationalPeriod, Schedule, period_ticks


def occupied_ticks(schedule: Schedule) -> set[int]:
    """Every busy tick over one repetition, by plain set expansion."""
    horizon = math.lcm(schedule.joint_period_ticks, schedule.time_base.bi_ticks)
    busy = set()
    for a in schedule.allocations:
        t = a.t_start
        while t < horizon:
            busy.update(range(t, t + a.tblk))
            t += a.tp
    return busy


def tick_scan_valid(schedule: Schedule) -> bool:
    """Validity re-derived from scratch: disjoint ticks + BI containment."""
    bi = schedule.time_base.bi_ticks
    horizon = math.lcm(schedule.joint_period_ticks, bi)
    seen = set()
    for a in schedule.allocations:
        t = a.t_start
        while t < horizon:
            block = range(t, t + a.tblk)
            if any(x in seen for x in block):
                return False
            if t // bi != (t + a.tblk - 1) // bi:
                return False
            seen.update(block)
            t += a.tp
    return True


def random_request(rng: random.Random, name: str, tb, period_fracs) -> AllocationRequest:
    num, den = rng.choice(period_fracs)
    period = RationalPeriod(num, den)
    tp = period_ticks(period, tb)
    cap = min(tp, tb.bi_ticks, 6)
    tmax = rng.randint(2, cap)
    tmin = rng.randint(1, tmax - 1)
    return AllocationRequest(name, period, tmin, tmax)
