"""Contention-free service-period scheduling of periodic traffic streams.

Admission control and scheduling for streams whose periods are integer
multiples or fractions of a beacon interval, with blocks that may not
cross beacon-interval boundaries. Ships a first-come-first-served
scheduler, a max-min fair scheduler, brute-force verification oracles,
an evaluation metric suite, and a simulation harness.
"""

from .feasibility import (
    FeasibleInterval,
    SearchWindow,
    enumerate_feasible_intervals,
    feasibility_check,
    right_boundary,
)
from .metrics import (
    MAX_OFFERED,
    MetricsReport,
    TrafficProfile,
    bi_occupancy,
    jain_index,
    mean_tblk_norm,
    min_occupancy,
    n_max,
    variability,
)
from .model import (
    Allocation,
    AllocationRequest,
    Block,
    Schedule,
    ScheduleViolation,
    duration_ratio,
    expand_blocks,
    schedule_to_doc,
    validate_request,
    validate_schedule,
)
from .oracle import oracle_feasible, oracle_maxmin, run_feasibility_equivalence
from .sched_maxmin import admit_maxmin, fair_ratio, resolve_collision
from .sched_simple import admit_simple
from .timebase import (
    DEFAULT_BI_TICKS,
    ConfigurationError,
    RationalPeriod,
    Tick,
    TimeBase,
    joint_period,
    period_ticks,
)

__version__ = "0.1.0"

__all__ = [
    "Allocation",
    "AllocationRequest",
    "Block",
    "ConfigurationError",
    "DEFAULT_BI_TICKS",
    "FeasibleInterval",
    "MAX_OFFERED",
    "MetricsReport",
    "RationalPeriod",
    "Schedule",
    "ScheduleViolation",
    "SearchWindow",
    "Tick",
    "TimeBase",
    "TrafficProfile",
    "admit_maxmin",
    "admit_simple",
    "bi_occupancy",
    "duration_ratio",
    "enumerate_feasible_intervals",
    "expand_blocks",
    "fair_ratio",
    "feasibility_check",
    "jain_index",
    "joint_period",
    "mean_tblk_norm",
    "min_occupancy",
    "n_max",
    "oracle_feasible",
    "oracle_maxmin",
    "period_ticks",
    "resolve_collision",
    "right_boundary",
    "run_feasibility_equivalence",
    "schedule_to_doc",
    "validate_request",
    "validate_schedule",
    "variability",
]
