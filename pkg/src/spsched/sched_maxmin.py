"""Max-min fair admission control.

A newcomer is admitted iff it fits with every allocation shrunk to its
minimum duration. Each feasible interval is then evaluated independently:
the newcomer is placed at the interval start with the largest duration the
interval allows, priors keep their pre-admission durations, and every
resulting head collision (a newcomer block starting inside, or exactly at
the end of, a prior block) is resolved through the fair-ratio case
analysis. A restore pass lets trimmed priors grow back into space the
newcomer did not use. The configuration with the highest minimum duration
ratio wins, earliest interval on ties. Start times of prior allocations
are never moved, and no duration ratio ever rises above its pre-admission
value.

Duration ratios are exact rationals derived from integer tick durations,
so score comparisons are total and free of rounding questions.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import replace
from fractions import Fraction
from typing import Optional

from .feasibility import _boundary, enumerate_feasible_intervals
from .model import Allocation, AllocationRequest, Schedule, duration_ratio, validate_request
from .timebase import Tick


def fair_ratio(
    t_lim: Tick,
    prior_start: Tick,
    prior_tmin: Tick,
    prior_tmax: Tick,
    new_tmin: Tick,
    new_tmax: Tick,
) -> Fraction:
    """Equal duration ratio two colliding streams can both attain.

    The prior's block starts at ``prior_start`` and the pair must fit in
    [prior_start, t_lim] back to back; the result is clamped to 1.
    """
    r = Fraction(
        t_lim - prior_start - prior_tmin - new_tmin,
        (prior_tmax - prior_tmin) + (new_tmax - new_tmin),
    )
    return r if r < 1 else Fraction(1)


def resolve_collision(
    prior_start: Tick,
    prior_tblk: Tick,
    prior_tmin: Tick,
    prior_tmax: Tick,
    new_start: Tick,
    new_tblk: Tick,
    new_tmin: Tick,
    new_tmax: Tick,
    t_lim: Tick,
) -> tuple[Tick, Tick, Tick]:
    """Resolve one head collision between a prior block and the newcomer.

    ``prior_start`` is the colliding block's start and ``t_lim`` the
    newcomer's current right boundary, both in the colliding block's frame.
    Returns (prior_tblk', new_start', new_tblk'). The prior's duration
    never grows, the newcomer never moves left, and its end stays within
    t_lim.

    Cases, with r* the fair ratio:
      - prior at or below r*: the prior keeps its duration and the newcomer
        is delayed to start right at its end;
      - newcomer at or below r* (or the fair split point already behind the
        newcomer): the newcomer holds position and the prior is cut back to
        end exactly at it;
      - both above r*: the prior is trimmed to the fair split and the rest
        of the boundary is handed to the newcomer.
    """
    r_star = fair_ratio(t_lim, prior_start, prior_tmin, prior_tmax, new_tmin, new_tmax)
    p, q = r_star.numerator, r_star.denominator
    prior_flex = prior_tmax - prior_tmin
    new_flex = new_tmax - new_tmin
    if (prior_tblk - prior_tmin) * q <= p * prior_flex:
        start = max(new_start, prior_start + prior_tblk)
        return prior_tblk, start, min(new_tblk, t_lim - start)
    # The prior sits above the fair ratio, so it must yield: pick the
    # boundary b (prior end = newcomer start) maximizing the pair's minimum
    # ratio. The prior's ratio rises with b while the newcomer's falls, so
    # the optimum straddles a crossing: either the exact fair point or, when
    # the newcomer's own duration cap binds first, the tick where the prior
    # reaches that cap. Candidates are the integer boundaries around both,
    # clamped so the prior never grows, the newcomer never moves left, and
    # at least its minimum duration fits before t_lim. The smallest boundary
    # wins ties, keeping the newcomer's end at the t_lim side.
    cap = Fraction(new_tblk - new_tmin, new_flex)
    anchors = (
        prior_tmin + p * prior_flex // q,
        prior_tmin + (cap.numerator * prior_flex) // cap.denominator,
    )
    candidates = {new_start}
    for a in anchors:
        candidates.update((prior_start + a, prior_start + a + 1))
    best = None
    for b in sorted(candidates):
        if b < new_start or b > prior_start + prior_tblk or t_lim - b < new_tmin:
            continue
        blk = min(new_tblk, t_lim - b)
        pair_min = min(
            Fraction(b - prior_start - prior_tmin, prior_flex),
            Fraction(blk - new_tmin, new_flex),
        )
        if best is None or pair_min > best[0]:
            best = (pair_min, b, blk)
    _, b, blk = best
    return b - prior_start, b, blk


def admit_maxmin(s: Schedule, req: AllocationRequest) -> Optional[Allocation]:
    """Admit ``req``, rebalancing prior durations; returns the allocation or None.

    Rejects iff the request does not fit even with every allocation (the
    newcomer included) shrunk to its minimum duration. On acceptance the
    schedule is replaced by the best-scoring configuration; on rejection it
    is unchanged.
    """
    tb = s.time_base
    bi = tb.bi_ticks
    tp_new = validate_request(req, tb)
    if any(a.id == req.id for a in s.allocations):
        raise ValueError(f"duplicate allocation id {req.id!r}")
    priors = list(s.allocations)

    shrunk = Schedule(tb)
    shrunk.allocations = [replace(a, tblk=a.tmin) for a in priors]
    intervals = enumerate_feasible_intervals(shrunk, tp_new, req.tmin)
    if not intervals:
        return None

    horizon = math.lcm(bi, tp_new, *(a.tp for a in priors))
    nheads = horizon // tp_new
    new_flex = req.tmax - req.tmin

    # Prior block starts never move, so one sorted view serves the whole
    # admission: collision lookups, boundary queries, and the restore pass.
    expanded = []
    for idx, a in enumerate(priors):
        t = a.t_start
        while t < 2 * horizon + bi:
            expanded.append((t, idx))
            t += a.tp
    expanded.sort()
    starts = [x[0] for x in expanded]
    owners = [x[1] for x in expanded]
    baseline = sorted((duration_ratio(a), i) for i, a in enumerate(priors))

    def evaluate(iv):
        t_new = iv.t_feas
        blk_new = min(req.tmax, iv.length)
        overrides: dict[int, Tick] = {}
        trimmed: dict[int, Tick] = {}  # prior index -> duration before first trim
        # Only the nearest block on the left of each newcomer block can ever
        # collide with it (priors are mutually disjoint), and delays keep
        # each newcomer block inside its original gap, so the candidate
        # pairs are static. Sorting visits priors in admission order and
        # their blocks in time order.
        pairs = []
        for h in range(nheads):
            i = bisect_right(starts, t_new + h * tp_new) - 1
            if i >= 0:
                pairs.append((owners[i], starts[i], h))
        pairs.sort()
        for owner, s_k, h in pairs:
            prior = priors[owner]
            cur = overrides.get(owner, prior.tblk)
            t_h = t_new + h * tp_new
            if not s_k <= t_h <= s_k + cur:
                continue
            # the newcomer's right boundary, recomputed at its current placement
            lim = _boundary(starts, bi, tp_new, blk_new, t_new, nheads)
            cur2, t_h2, blk_new = resolve_collision(
                s_k, cur, prior.tmin, prior.tmax,
                t_h, blk_new, req.tmin, req.tmax, lim + h * tp_new,
            )
            if cur2 < cur:
                trimmed.setdefault(owner, cur)
                overrides[owner] = cur2
            t_new = t_h2 - h * tp_new
        # restore pass: trimmed priors grow back toward their pre-admission
        # duration within whatever room the final newcomer placement leaves
        for owner, prev in trimmed.items():
            prior = priors[owner]
            room = _boundary(
                starts, bi, prior.tp, overrides[owner], prior.t_start,
                horizon // prior.tp, extra=(t_new, tp_new),
            ) - prior.t_start
            overrides[owner] = min(prev, room)
        score = Fraction(blk_new - req.tmin, new_flex)
        for r, i in baseline:
            if i not in overrides:
                score = min(score, r)
                break
        for i, blk in overrides.items():
            a = priors[i]
            score = min(score, Fraction(blk - a.tmin, a.tmax - a.tmin))
        return score, overrides, t_new, blk_new

    best = None
    for iv in intervals:
        cand = evaluate(iv)
        if best is None or cand[0] > best[0]:  # strict: earliest interval wins ties
            best = cand
    _, overrides, t_new, blk_new = best
    alloc = Allocation(
        id=req.id, t_start=t_new, tp=tp_new, tblk=blk_new,
        tmin=req.tmin, tmax=req.tmax,
    )
    s.allocations = [
        replace(a, tblk=overrides[i]) if i in overrides else a
        for i, a in enumerate(priors)
    ] + [alloc]
    return alloc
