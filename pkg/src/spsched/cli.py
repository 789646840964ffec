"""Command-line interface: scenario sweeps, batch scheduling, verification.

Exit codes: 0 success, 1 validation or usage error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .harness import (
    SCENARIO1_FIELDS,
    SCENARIO2_AGG_FIELDS,
    SCENARIO2_FIELDS,
    POLICIES,
    ScenarioConfig,
    parse_grid,
    requests_from_doc,
    run_scenario1,
    run_scenario2,
    write_csv,
)
from .model import schedule_to_doc, validate_schedule, Schedule
from .oracle import run_feasibility_equivalence
from .timebase import DEFAULT_BI_TICKS


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="spsched", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s1 = sub.add_parser("scenario1", help="homogeneous-traffic sweep over rho")
    s1.add_argument("--rho-grid", default="0.01:0.99:0.02", metavar="START:STOP:STEP")
    s1.add_argument("--bi-ticks", type=int, default=DEFAULT_BI_TICKS)
    s1.add_argument("--policy", choices=["simple", "maxmin", "both"], default="both")
    s1.add_argument("--out", default="scenario1.csv")

    s2 = sub.add_parser("scenario2", help="two-class mix sweep over P(C1)")
    s2.add_argument("--pc1-grid", default="0:1:0.05", metavar="START:STOP:STEP")
    s2.add_argument("--runs", type=int, default=30)
    s2.add_argument("--seed", type=int, default=17)
    s2.add_argument("--bi-ticks", type=int, default=DEFAULT_BI_TICKS)
    s2.add_argument("--policy", choices=["simple", "maxmin", "both"], default="both")
    s2.add_argument("--out", default="scenario2.csv")

    sched = sub.add_parser("schedule", help="batch admission over a JSON request list")
    sched.add_argument("--requests", required=True, metavar="FILE")
    sched.add_argument("--policy", choices=["simple", "maxmin"], default="simple")
    sched.add_argument("--out", metavar="FILE", help="schedule document (default stdout)")

    ver = sub.add_parser("verify", help="exhaustive oracle-equivalence suite")
    ver.add_argument("--max-bi-ticks", type=int, default=12)
    return parser


def _cmd_scenario1(args) -> int:
    cfg = ScenarioConfig(
        scenario=1, bi_ticks=args.bi_ticks, policy=args.policy,
        rho_grid=parse_grid(args.rho_grid),
    )
    write_csv(args.out, SCENARIO1_FIELDS, run_scenario1(cfg))
    return 0


def _cmd_scenario2(args) -> int:
    cfg = ScenarioConfig(
        scenario=2, bi_ticks=args.bi_ticks, policy=args.policy,
        pc1_grid=parse_grid(args.pc1_grid), runs=args.runs, base_seed=args.seed,
    )
    if cfg.runs < 1:
        raise ValueError("--runs must be at least 1")
    rows, agg = run_scenario2(cfg)
    write_csv(args.out, SCENARIO2_FIELDS, rows)
    agg_path = str(Path(args.out).with_suffix("")) + "_agg.csv"
    write_csv(agg_path, SCENARIO2_AGG_FIELDS, agg)
    return 0


def _cmd_schedule(args) -> int:
    try:
        text = Path(args.requests).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"spsched: cannot read {args.requests}: {exc}", file=sys.stderr)
        return 2
    tb, reqs = requests_from_doc(json.loads(text))
    admit = POLICIES[args.policy]
    schedule = Schedule(tb)
    for req in reqs:
        alloc = admit(schedule, req)
        if alloc is None:
            print(f"{req.id}: rejected")
        else:
            print(f"{req.id}: accepted t_start={alloc.t_start} tblk={alloc.tblk}")
    violation = validate_schedule(schedule)
    if violation is not None:
        print(f"spsched: internal error, invalid schedule: {violation.message}",
              file=sys.stderr)
        return 1
    doc = json.dumps(schedule_to_doc(schedule), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(doc, encoding="utf-8")
    else:
        sys.stdout.write(doc)
    return 0


def _cmd_verify(args) -> int:
    checked, mismatches = run_feasibility_equivalence(max_bi_ticks=args.max_bi_ticks)
    print(f"checked {checked} instances: {len(mismatches)} mismatches")
    for m in mismatches[:20]:
        print(f"  {m}")
    return 0 if checked > 0 and not mismatches else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "scenario1": _cmd_scenario1,
        "scenario2": _cmd_scenario2,
        "schedule": _cmd_schedule,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except OSError as exc:
        print(f"spsched: I/O error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"spsched: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
