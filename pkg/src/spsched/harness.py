"""Scenario generation, experiment sweeps, deterministic seeding, CSV rows.

Scenario 1 offers identical requests up to the capacity bound and is fully
deterministic. Scenario 2 mixes two request classes drawn from a seeded
generator, offering requests while the cumulative minimum occupancy stays
within one period's worth of air time; each (grid point, run) pair gets
its own seed so results are reproducible independent of execution order.
"""

from __future__ import annotations

import csv
import math
import random
import statistics
from dataclasses import dataclass, field
from fractions import Fraction
from .metrics import (
    MetricsReport,
    TrafficProfile,
    bi_occupancy,
    jain_index,
    mean_tblk_norm,
    min_occupancy,
    n_max,
    variability,
)
from .model import AllocationRequest, Schedule, duration_ratio
from .sched_maxmin import admit_maxmin
from .sched_simple import admit_simple
from .timebase import DEFAULT_BI_TICKS, RationalPeriod, TimeBase

POLICIES = {"simple": admit_simple, "maxmin": admit_maxmin}

SCENARIO1_FIELDS = [
    "rho", "policy", "offered", "accepted", "acceptance_rate",
    "n_max", "jain_tblk", "jain_r", "mean_tblk_norm", "occupancy",
]
SCENARIO2_FIELDS = [
    "pc1", "policy", "run", "seed", "offered",
    "accepted_c1", "accepted_c2", "nu", "occupancy",
]
SCENARIO2_AGG_FIELDS = [
    "pc1", "policy", "runs", "nu_mean", "nu_ci95",
    "occupancy_mean", "occupancy_ci95", "accepted_c1_mean", "accepted_c2_mean",
]


def parse_grid(text: str) -> list[Fraction]:
    """Parse 'start:stop:step' into exact decimal grid values, stop inclusive."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be start:stop:step, got {text!r}")
    start, stop, step = (Fraction(p) for p in parts)
    if step <= 0 or start > stop:
        raise ValueError(f"grid {text!r} is empty or descending")
    out = []
    v = start
    while v <= stop:
        out.append(v)
        v += step
    return out


@dataclass
class ScenarioConfig:
    """Knobs for both scenarios; unused fields are ignored per scenario."""

    scenario: int = 1
    bi_ticks: int = DEFAULT_BI_TICKS
    policy: str = "both"  # simple | maxmin | both
    lam: Fraction = Fraction(1, 10)
    # scenario 1: homogeneous traffic swept over the interval ratio
    rho_grid: list = field(default_factory=lambda: parse_grid("0.01:0.99:0.02"))
    period: RationalPeriod = RationalPeriod(1, 3)
    # scenario 2: two coexisting classes, swept over the class-1 probability
    rho: Fraction = Fraction(1, 10)
    period_c1: RationalPeriod = RationalPeriod(1, 3)
    period_c2: RationalPeriod = RationalPeriod(1, 5)
    pc1_grid: list = field(default_factory=lambda: parse_grid("0:1:0.05"))
    runs: int = 30
    base_seed: int = 17

    def policy_list(self) -> list[str]:
        if self.policy == "both":
            return sorted(POLICIES)
        if self.policy not in POLICIES:
            raise ValueError(f"unknown policy {self.policy!r}")
        return [self.policy]


def run_scenario1(cfg: ScenarioConfig) -> list[dict]:
    """Sweep the interval ratio with homogeneous requests; one row per
    (rho, policy). No randomness is consumed."""
    tb = TimeBase(cfg.bi_ticks)
    rows = []
    for rho in cfg.rho_grid:
        profile = TrafficProfile.from_params(rho, cfg.lam, cfg.period, tb)
        offered = n_max(profile)
        for policy in cfg.policy_list():
            admit = POLICIES[policy]
            s = Schedule(tb)
            accepted = 0
            for i in range(offered):
                req = AllocationRequest(
                    f"req-{i:03d}", cfg.period, profile.tmin_ticks, profile.tmax_ticks
                )
                if admit(s, req) is not None:
                    accepted += 1
            report = MetricsReport(
                offered=offered,
                accepted=accepted,
                acceptance_rate=accepted / offered,
                n_max=n_max(profile),
                jain_tblk=jain_index([a.tblk for a in s.allocations]),
                jain_r=jain_index([float(duration_ratio(a)) for a in s.allocations]),
                mean_tblk_norm=mean_tblk_norm(s, profile.tmax_ticks),
                occupancy=bi_occupancy(s),
                o_min=min_occupancy(profile),
            )
            rows.append({
                "rho": float(rho),
                "policy": policy,
                "offered": report.offered,
                "accepted": report.accepted,
                "acceptance_rate": report.acceptance_rate,
                "n_max": report.n_max,
                "jain_tblk": report.jain_tblk,
                "jain_r": report.jain_r,
                "mean_tblk_norm": "" if report.mean_tblk_norm is None
                                  else report.mean_tblk_norm,
                "occupancy": report.occupancy,
            })
    return rows


def _draw_classes(rng: random.Random, pc1: Fraction, o_min: dict) -> list[str]:
    """Class labels drawn while cumulative minimum occupancy stays <= 1."""
    classes = []
    cum = Fraction(0)
    while True:
        label = "C1" if rng.random() < pc1 else "C2"
        if cum + o_min[label] > 1:
            return classes
        cum += o_min[label]
        classes.append(label)


def run_scenario2(cfg: ScenarioConfig) -> tuple[list[dict], list[dict]]:
    """Sweep the class-1 probability; returns (per-run rows, aggregate rows).

    seed = base_seed + run*10007 + grid_index, so every (grid point, run)
    cell is reproducible in isolation.
    """
    tb = TimeBase(cfg.bi_ticks)
    profiles = {
        "C1": TrafficProfile.from_params(cfg.rho, cfg.lam, cfg.period_c1, tb),
        "C2": TrafficProfile.from_params(cfg.rho, cfg.lam, cfg.period_c2, tb),
    }
    o_min = {
        label: Fraction(p.tmin_ticks, p.tp_ticks) for label, p in profiles.items()
    }
    rows = []
    agg_rows = []
    for gi, pc1 in enumerate(cfg.pc1_grid):
        samples = {policy: [] for policy in cfg.policy_list()}
        for run in range(cfg.runs):
            seed = cfg.base_seed + run * 10007 + gi
            classes = _draw_classes(random.Random(seed), pc1, o_min)
            for policy in cfg.policy_list():
                admit = POLICIES[policy]
                s = Schedule(tb)
                counts = {"C1": 0, "C2": 0}
                for i, label in enumerate(classes):
                    p = profiles[label]
                    req = AllocationRequest(
                        f"req-{i:03d}", p.period, p.tmin_ticks, p.tmax_ticks,
                        class_label=label,
                    )
                    if admit(s, req) is not None:
                        counts[label] += 1
                nu = variability(counts["C1"], counts["C2"])
                occ = bi_occupancy(s)
                samples[policy].append((run, seed, len(classes), counts, nu, occ))
        for policy in cfg.policy_list():
            for run, seed, offered, counts, nu, occ in samples[policy]:
                rows.append({
                    "pc1": float(pc1),
                    "policy": policy,
                    "run": run,
                    "seed": seed,
                    "offered": offered,
                    "accepted_c1": counts["C1"],
                    "accepted_c2": counts["C2"],
                    "nu": nu,
                    "occupancy": occ,
                })
            nus = [x[4] for x in samples[policy]]
            occs = [x[5] for x in samples[policy]]
            agg_rows.append({
                "pc1": float(pc1),
                "policy": policy,
                "runs": cfg.runs,
                "nu_mean": statistics.fmean(nus),
                "nu_ci95": _ci95(nus),
                "occupancy_mean": statistics.fmean(occs),
                "occupancy_ci95": _ci95(occs),
                "accepted_c1_mean": statistics.fmean(x[3]["C1"] for x in samples[policy]),
                "accepted_c2_mean": statistics.fmean(x[3]["C2"] for x in samples[policy]),
            })
    return rows, agg_rows


def _ci95(xs) -> float:
    """Half-width of a normal 95% confidence interval over the samples."""
    if len(xs) < 2:
        return 0.0
    return 1.96 * statistics.stdev(xs) / math.sqrt(len(xs))


def write_csv(path: str, fieldnames: list[str], rows: list[dict]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(rows)


def requests_from_doc(doc: dict) -> tuple[TimeBase, list[AllocationRequest]]:
    """Decode the batch-admission request document.

    Schema: {"bi_ticks": int, "requests": [{"id", "period": {"num", "den"},
    "tmin", "tmax", "class"?}]}.
    """
    try:
        tb = TimeBase(int(doc["bi_ticks"]))
        reqs = []
        for r in doc["requests"]:
            period = RationalPeriod(int(r["period"]["num"]), int(r["period"]["den"]))
            reqs.append(AllocationRequest(
                id=str(r["id"]),
                period=period,
                tmin=int(r["tmin"]),
                tmax=int(r["tmax"]),
                class_label=r.get("class"),
            ))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed request document: {exc}") from exc
    return tb, reqs
