import random

import pytest

from spsched import (
    Allocation,
    AllocationRequest,
    Block,
    RationalPeriod,
    Schedule,
    TimeBase,
    admit_simple,
    expand_blocks,
    schedule_to_doc,
    validate_request,
    validate_schedule,
)
from conftest import tick_scan_valid

TB12 = TimeBase(12)


def alloc(t_start, tp, tblk, tmin=None, tmax=None):
    return Allocation("a", t_start, tp, tblk, tmin or tblk, tmax or tblk)


def test_expand_blocks_examples():
    assert expand_blocks(alloc(2, 6, 3), 12) == [Block(2, 5), Block(8, 11)]
    assert expand_blocks(alloc(0, 6, 2), 12) == [Block(0, 2), Block(6, 8)]
    assert expand_blocks(alloc(5, 6, 1), 6) == [Block(5, 6)]


def test_expand_blocks_sorted_and_periodic():
    a = alloc(1, 4, 2)
    blocks = expand_blocks(a, 20)
    assert blocks == sorted(blocks, key=lambda b: b.start)
    shifted = expand_blocks(Allocation("a", 1 + 4, 4, 2, 2, 2), 24)
    assert [(b.start, b.end) for b in shifted[: len(blocks)]] == [
        (b.start + 4, b.end + 4) for b in blocks
    ]


def test_block_rejects_empty_interval():
    with pytest.raises(ValueError):
        Block(3, 3)


def test_validate_schedule_ok():
    s = Schedule(TB12, [Allocation("x", 0, 6, 2, 2, 2), Allocation("y", 2, 6, 3, 3, 3)])
    assert validate_schedule(s) is None
    assert tick_scan_valid(s)


def test_validate_schedule_overlap():
    s = Schedule(TB12, [Allocation("x", 0, 6, 2, 2, 2), Allocation("y", 1, 6, 2, 2, 2)])
    v = validate_schedule(s)
    assert v is not None and v.kind == "overlap"
    assert "[0, 2)" in v.message and "[1, 3)" in v.message


def test_validate_schedule_bi_crossing():
    s = Schedule(TB12, [Allocation("x", 11, 6, 2, 2, 2)])
    v = validate_schedule(s)
    assert v is not None and v.kind == "bi-crossing"
    assert "[11, 13)" in v.message


def test_validate_schedule_duration_range():
    s = Schedule(TB12, [Allocation("x", 0, 6, 5, 1, 4)])
    v = validate_schedule(s)
    assert v is not None and v.kind == "duration-range"


def test_shrinking_any_duration_keeps_validity():
    # build valid schedules by admission, then shrink one member at a time
    rng = random.Random(5)
    tb = TimeBase(24)
    for trial in range(40):
        s = Schedule(tb)
        for i in range(rng.randint(1, 4)):
            tp_den = rng.choice([1, 2, 3, 4])
            tmax = rng.randint(2, min(24 // tp_den, 6))
            req = AllocationRequest(
                f"r{i}", RationalPeriod(1, tp_den), rng.randint(1, tmax - 1), tmax
            )
            admit_simple(s, req)
        assert validate_schedule(s) is None
        for idx, a in enumerate(s.allocations):
            if a.tblk > a.tmin:
                shrunk = s.copy()
                shrunk.allocations[idx] = Allocation(
                    a.id, a.t_start, a.tp, a.tblk - 1, a.tmin, a.tmax
                )
                assert validate_schedule(shrunk) is None


def test_validate_request_bounds():
    tb = TimeBase(12)
    p = RationalPeriod(1, 2)
    assert validate_request(AllocationRequest("r", p, 2, 5), tb) == 6
    with pytest.raises(ValueError):
        validate_request(AllocationRequest("r", p, 3, 3), tb)  # tmin == tmax
    with pytest.raises(ValueError):
        validate_request(AllocationRequest("r", p, 0, 2), tb)
    with pytest.raises(ValueError):
        validate_request(AllocationRequest("r", p, 2, 7), tb)  # beyond period
    with pytest.raises(ValueError):
        # fits the 24-tick period but not inside one 12-tick beacon interval
        validate_request(AllocationRequest("r", RationalPeriod(2), 2, 20), tb)


def test_schedule_rejects_duplicate_id():
    s = Schedule(TB12, [Allocation("x", 0, 6, 2, 2, 2)])
    with pytest.raises(ValueError):
        s.add(Allocation("x", 2, 6, 2, 2, 2))


def test_schedule_joint_period():
    s = Schedule(TB12)
    assert s.joint_period_ticks == 12
    s.add(Allocation("x", 0, 4, 1, 1, 1))
    s.add(Allocation("y", 1, 6, 1, 1, 1))
    assert s.joint_period_ticks == 12
    s.add(Allocation("z", 13, 24, 1, 1, 1))
    assert s.joint_period_ticks == 24


def test_schedule_to_doc_field_names():
    s = Schedule(TB12, [Allocation("x", 2, 6, 3, 2, 5)])
    doc = schedule_to_doc(s)
    assert doc == {
        "bi_ticks": 12,
        "allocations": [
            {"id": "x", "t_start": 2, "tp": 6, "tblk": 3, "tmin": 2, "tmax": 5}
        ],
    }
