#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
CSV и текстовые результаты запуска планировщика
"""

import csv
from pathlib import Path
from typing import Sequence, Union

from src.core.params import ModelParams
from src.core.validation import Violation
from src.scheduler.cost import social_cost
from src.scheduler.evaluation import CostReport
from src.scheduler.ledger import Schedule
from src.social_requests.model import MaterializedRequest

SCHEDULE_FIELDS = ("request_id", "alter_id", "mode", "day_effective", "cost_days")
COST_SUMMARY_FIELDS = (
    "total_cost_days",
    "mean_cost_per_alter",
    "spare_time_hours",
    "n_year1",
    "n_year2",
    "n_unscheduled",
)


def write_schedule_csv(
    path: Union[str, Path],
    schedule: Schedule,
    requests: Sequence[MaterializedRequest],
    params: ModelParams,
) -> None:
    by_id = {r.request_id: r for r in requests}
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(SCHEDULE_FIELDS)
        for assignment in schedule.assignments:
            request = by_id[assignment.request_id]
            writer.writerow([
                request.request_id,
                request.alter_id,
                request.mode.value,
                assignment.day,
                social_cost(request.window, assignment.day, params.horizon_k),
            ])


def write_cost_summary_csv(path: Union[str, Path], report: CostReport) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(COST_SUMMARY_FIELDS)
        writer.writerow([
            report.total_cost,
            repr(report.mean_cost_per_alter),
            repr(report.spare_time),
            report.n_year1,
            report.n_year2,
            report.n_unscheduled,
        ])


def write_validation_report(
    path: Union[str, Path],
    violations: Sequence[Violation],
    unscheduled: Sequence[int] = (),
) -> None:
    """Пишет по одному нарушению в строке или OK, если нарушений нет"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    lines = [str(v) for v in violations] or ["OK"]
    if unscheduled:
        lines.append(f"unscheduled requests: {' '.join(str(i) for i in unscheduled)}")
    target.write_text("\n".join(lines) + "\n", encoding="utf-8")
