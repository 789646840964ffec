"""Cross-cutting randomized properties tying the modules together."""

import random

from spsched import (
    Schedule,
    SearchWindow,
    TimeBase,
    admit_maxmin,
    admit_simple,
    enumerate_feasible_intervals,
    feasibility_check,
    oracle_feasible,
    validate_schedule,
)
from conftest import occupied_ticks, random_request, tick_scan_valid

FRACS = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1)]


def build_random_schedule(rng, tb, n, policy):
    s = Schedule(tb)
    for i in range(n):
        policy(s, random_request(rng, f"r{i}", tb, FRACS))
    return s


def test_validators_agree():
    rng = random.Random(77)
    for trial in range(80):
        tb = TimeBase(rng.choice([12, 24]))
        policy = rng.choice([admit_simple, admit_maxmin])
        s = build_random_schedule(rng, tb, rng.randint(0, 5), policy)
        assert validate_schedule(s) is None
        assert tick_scan_valid(s)


def test_feasibility_matches_tick_scan_on_admitted_schedules():
    rng = random.Random(42)
    for trial in range(120):
        tb = TimeBase(rng.choice([12, 24]))
        policy = rng.choice([admit_simple, admit_maxmin])
        s = build_random_schedule(rng, tb, rng.randint(0, 4), policy)
        tp = tb.bi_ticks // rng.choice([1, 2, 3, 4])
        blk = rng.randint(1, min(4, tp))
        win = SearchWindow(0, tp)
        assert feasibility_check(s, tp, blk, win) == oracle_feasible(s, tp, blk, win)


def test_intervals_cover_exactly_the_feasible_starts():
    rng = random.Random(8)
    for trial in range(60):
        tb = TimeBase(12)
        s = build_random_schedule(rng, tb, rng.randint(0, 3), admit_simple)
        tp = 12 // rng.choice([1, 2, 3])
        blk = rng.randint(1, min(3, tp))
        intervals = enumerate_feasible_intervals(s, tp, blk)
        covered = set()
        for iv in intervals:
            covered.update(range(iv.t_feas, iv.t_lim - blk + 1))
        feasible = {
            t for t in range(0, tp - blk + 1)
            if oracle_feasible(s, tp, blk, SearchWindow(0, tp)) is not None
            and oracle_feasible(s, tp, blk, SearchWindow(t, tp)) == t
        }
        assert covered == feasible


def test_occupancy_never_exceeds_capacity():
    rng = random.Random(19)
    for trial in range(50):
        tb = TimeBase(24)
        policy = rng.choice([admit_simple, admit_maxmin])
        s = build_random_schedule(rng, tb, rng.randint(1, 6), policy)
        horizon = s.joint_period_ticks
        busy = {t for t in occupied_ticks(s) if t < horizon}
        assert len(busy) <= horizon
