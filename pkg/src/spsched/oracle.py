"""Brute-force reference implementations for desk-scale verification.

The oracles re-derive feasibility and fairness answers by exhaustive
enumeration over tick bitmasks, sharing no search logic with the
production modules they check. They may be exponential and are meant for
small beacon intervals only.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional

from .feasibility import SearchWindow, feasibility_check
from .model import Allocation, AllocationRequest, Schedule, validate_request
from .timebase import Tick, TimeBase


def _occupancy_mask(entries: Iterable[tuple[Tick, Tick, Tick]], span: Tick) -> int:
    """Bitmask of busy ticks over [0, span); bit t set means tick t occupied."""
    mask = 0
    for t0, tp, tblk in entries:
        bits = (1 << tblk) - 1
        t = t0
        while t < span:
            mask |= bits << t
            t += tp
    return mask


def _inside_one_bi(bi: Tick, start: Tick, tblk: Tick) -> bool:
    return start // bi == (start + tblk - 1) // bi


def oracle_feasible(
    existing: Schedule, tp: Tick, tblk: Tick, window: SearchWindow
) -> Optional[Tick]:
    """Earliest valid start found by trying every tick in the window in order."""
    bi = existing.time_base.bi_ticks
    horizon = math.lcm(bi, tp, *(a.tp for a in existing.allocations))
    span = window.t_max + horizon + tblk
    occupied = _occupancy_mask(
        [(a.t_start, a.tp, a.tblk) for a in existing.allocations], span
    )
    bits = (1 << tblk) - 1
    for t in range(window.t_min, window.t_max - tblk + 1):
        for k in range(horizon // tp):
            s = t + k * tp
            if (occupied >> s) & bits or not _inside_one_bi(bi, s, tblk):
                break
        else:
            return t
    return None


def oracle_maxmin(existing: Schedule, req: AllocationRequest) -> Optional[Fraction]:
    """Best achievable minimum duration ratio for one admission, or None.

    Exhausts every newcomer start tick in [0, tp) and every tick-valued
    duration assignment in which no prior start moves and no prior duration
    grows past its current value. A configuration is valid when all blocks
    are disjoint, sit inside single beacon intervals, and the newcomer's
    first block ends within its period.
    """
    tb = existing.time_base
    bi = tb.bi_ticks
    tp_new = validate_request(req, tb)
    priors = existing.allocations
    horizon = math.lcm(bi, tp_new, *(a.tp for a in priors))
    span = tp_new + horizon + req.tmax

    # Priors are mutually disjoint at their current durations, so any
    # combination of shrunk durations stays disjoint: masks can be OR-ed.
    # Durations are listed largest first so the all-current combination is
    # tried first, which makes the incumbent prune effective.
    choices = []
    for a in priors:
        opts = [
            (Fraction(blk - a.tmin, a.tmax - a.tmin),
             _occupancy_mask([(a.t_start, a.tp, blk)], span))
            for blk in range(a.tblk, a.tmin - 1, -1)
        ]
        choices.append(opts)

    best: Optional[Fraction] = None
    for combo in product(*choices):
        floor_r = min((r for r, _ in combo), default=Fraction(1))
        if best is not None and floor_r <= best:
            continue
        occupied = 0
        for _, m in combo:
            occupied |= m
        # Shrinking a block in place keeps validity, so scanning durations
        # downward finds the largest placeable one first; anything smaller
        # can only lower the score.
        for blk in range(req.tmax, req.tmin - 1, -1):
            score = min(floor_r, Fraction(blk - req.tmin, req.tmax - req.tmin))
            if best is not None and score <= best:
                break
            bits = (1 << blk) - 1
            for t in range(0, tp_new - blk + 1):
                for k in range(horizon // tp_new):
                    s = t + k * tp_new
                    if (occupied >> s) & bits or not _inside_one_bi(bi, s, blk):
                        break
                else:
                    best = score
                    break
            else:
                continue
            break
    return best


def feasibility_equivalence_cases(bi_values=(6, 8, 12, 24)):
    """Yield (existing, tp, tblk, window) over a declared exhaustive family.

    Per beacon interval: candidate periods are every divisor of the BI plus
    2*BI, candidate durations 1..3; existing schedules are every valid
    combination (order-free) of member allocations drawn from the same
    periods with durations 1..2 and the full start range, up to the member
    count below. Counts are sized so the whole sweep, production search plus
    oracle, stays within the acceptance-suite runtime budget.
    """
    max_members = {6: 3, 8: 3, 12: 3, 24: 2}
    for bi in bi_values:
        tb = TimeBase(bi)
        periods = sorted({bi // d for d in range(1, bi + 1) if bi % d == 0})
        periods.append(2 * bi)
        pool = []
        for tp in periods:
            for tblk in (1, 2):
                if tblk > min(tp, bi):
                    continue
                for t0 in range(tp):
                    a = Allocation(f"m{len(pool)}", t0, tp, tblk, tblk, tblk)
                    if all(
                        _inside_one_bi(bi, s, tblk)
                        for s in range(t0, math.lcm(bi, tp), tp)
                    ):
                        pool.append(a)
        span = math.lcm(bi, *periods)
        masks = [_occupancy_mask([(a.t_start, a.tp, a.tblk)], span) for a in pool]

        def candidates():
            for tp in periods:
                for tblk in (1, 2, 3):
                    if tblk <= min(tp, bi):
                        yield tp, tblk

        def emit(member_idx):
            s = Schedule(tb)
            for rank, i in enumerate(member_idx):
                s.allocations.append(
                    Allocation(f"a{rank}", pool[i].t_start, pool[i].tp,
                               pool[i].tblk, pool[i].tblk, pool[i].tblk)
                )
            return [
                (s, tp, tblk, SearchWindow(0, tp)) for tp, tblk in candidates()
            ]

        stack = [((), 0)]
        while stack:
            chosen, used_mask = stack.pop()
            yield from emit(chosen)
            if len(chosen) >= max_members[bi]:
                continue
            lo = chosen[-1] + 1 if chosen else 0
            for i in range(lo, len(pool)):
                if masks[i] & used_mask == 0:
                    stack.append((chosen + (i,), used_mask | masks[i]))


def run_feasibility_equivalence(
    max_bi_ticks: int = 24, bi_values=(6, 8, 12, 24)
) -> tuple[int, list[str]]:
    """Compare feasibility_check with oracle_feasible across the family.

    Returns (instances checked, mismatch descriptions). Equivalence covers
    both the feasible/infeasible verdict and the earliest start.
    """
    checked = 0
    mismatches = []
    selected = tuple(bi for bi in bi_values if bi <= max_bi_ticks)
    for existing, tp, tblk, window in feasibility_equivalence_cases(selected):
        got = feasibility_check(existing, tp, tblk, window)
        want = oracle_feasible(existing, tp, tblk, window)
        checked += 1
        if got != want:
            members = [(a.t_start, a.tp, a.tblk) for a in existing.allocations]
            mismatches.append(
                f"bi={existing.time_base.bi_ticks} existing={members} "
                f"candidate=(tp={tp}, tblk={tblk}): got {got}, oracle {want}"
            )
    return checked, mismatches
