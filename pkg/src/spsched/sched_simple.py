"""First-come-first-served admission with frozen prior allocations.

The newcomer is granted the longest feasible interval (capped at its
tmax); nothing already scheduled is ever touched, so early arrivals that
grab large slices permanently disadvantage later ones.
"""

from __future__ import annotations

from typing import Optional

from .feasibility import enumerate_feasible_intervals
from .model import Allocation, AllocationRequest, Schedule, validate_request


def admit_simple(s: Schedule, req: AllocationRequest) -> Optional[Allocation]:
    """Admit ``req`` against frozen priors; returns the allocation or None.

    Feasible intervals are enumerated with the candidate at tmin, so the
    acceptance predicate (some interval exists) and the grant share one
    enumeration. The grant takes the longest interval, earliest on ties,
    with tblk = min(tmax, interval length). Rejection is a result, not an
    error; the schedule is unchanged by it.
    """
    tp = validate_request(req, s.time_base)
    if any(a.id == req.id for a in s.allocations):
        raise ValueError(f"duplicate allocation id {req.id!r}")
    intervals = enumerate_feasible_intervals(s, tp, req.tmin)
    if not intervals:
        return None
    best = max(intervals, key=lambda iv: iv.length)  # max keeps the earliest tie
    alloc = Allocation(
        id=req.id,
        t_start=best.t_feas,
        tp=tp,
        tblk=min(req.tmax, best.length),
        tmin=req.tmin,
        tmax=req.tmax,
    )
    s.add(alloc)
    return alloc
