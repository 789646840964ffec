import math

import pytest
from hypothesis import given, strategies as st

from spsched import (
    ConfigurationError,
    RationalPeriod,
    TimeBase,
    joint_period,
    period_ticks,
)

TB = TimeBase(27720)


def brute_joint_ticks(tick_periods: list[int]) -> int:
    """Smallest T > 0 that is an integer multiple of every tick period."""
    t = max(tick_periods)
    while any(t % p for p in tick_periods):
        t += 1
    return t


def test_period_ticks_examples():
    assert period_ticks(RationalPeriod(1, 3), TB) == 9240
    assert period_ticks(RationalPeriod(2, 1), TB) == 55440
    assert period_ticks(RationalPeriod(1, 5), TB) == 5544


def test_period_ticks_requires_divisibility():
    with pytest.raises(ConfigurationError):
        period_ticks(RationalPeriod(1, 13), TB)


def test_rational_period_constraints():
    with pytest.raises(ValueError):
        RationalPeriod(2, 3)  # neither multiple nor fraction
    with pytest.raises(ValueError):
        RationalPeriod(0, 1)
    assert RationalPeriod(1, 12).den == 12


def test_time_base_positive():
    with pytest.raises(ConfigurationError):
        TimeBase(0)


def test_joint_period_examples():
    half_third = [RationalPeriod(1, 2), RationalPeriod(1, 3)]
    assert joint_period(half_third, TB) == 27720
    assert joint_period(half_third, TB) == brute_joint_ticks([13860, 9240])

    quarter_half = [RationalPeriod(1, 4), RationalPeriod(1, 2)]
    # the joint period equals the slower stream's period
    assert joint_period(quarter_half, TB) == 13860

    multiples = [RationalPeriod(2), RationalPeriod(3)]
    assert joint_period(multiples, TB) == 166320
    assert joint_period(multiples, TB) == brute_joint_ticks([55440, 83160])


def test_joint_period_empty_list():
    with pytest.raises(ValueError):
        joint_period([], TB)


PERIOD_POOL = [RationalPeriod(n, d) for n, d in
               [(1, 1), (1, 2), (1, 3), (1, 4), (1, 6), (1, 12), (2, 1), (3, 1)]]


@given(st.lists(st.sampled_from(PERIOD_POOL), min_size=1, max_size=5), st.randoms())
def test_joint_period_permutation_and_duplication(periods, rng):
    base = joint_period(periods, TB)
    shuffled = list(periods)
    rng.shuffle(shuffled)
    assert joint_period(shuffled, TB) == base
    assert joint_period(periods + [periods[0]], TB) == base


@given(st.lists(st.sampled_from(PERIOD_POOL), min_size=1, max_size=5))
def test_joint_period_is_common_multiple(periods):
    joint = joint_period(periods, TB)
    ticks = [period_ticks(p, TB) for p in periods]
    assert all(joint % t == 0 for t in ticks)
    assert joint == math.lcm(*ticks)


@given(st.sampled_from(PERIOD_POOL))
def test_joint_period_singleton(period):
    assert joint_period([period], TB) == period_ticks(period, TB)
