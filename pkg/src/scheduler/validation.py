#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Проверка расписания с отчетом о нарушениях
"""

import math
from collections import Counter, defaultdict
from typing import Dict, List, Sequence

from src.allocator.solver import TimeAllocation
from src.core.network import ConflictGraph
from src.core.params import ModelParams
from src.core.validation import Violation
from src.scheduler.ledger import Assignment, Schedule, build_ledger
from src.social_requests.model import MaterializedRequest

TOLERANCE = 1e-9


def _relative(value: float) -> float:
    return TOLERANCE * max(1.0, abs(value))


def validate_schedule(
    schedule: Schedule,
    requests: Sequence[MaterializedRequest],
    conflicts: ConflictGraph,
    allocation: TimeAllocation,
    params: ModelParams,
) -> List[Violation]:
    """Проверяет расписание по всем ограничениям планирования

    Дневные лимиты, конфликтующие пары и бюджет пересказа проверяются по
    журналу, восстановленному из назначений. Суммы по режимам учитывают только
    запланированные запросы, поэтому незапланированные видны как недостача.

    Returns:
        Список нарушений, пустой для корректного расписания
    """
    report: List[Violation] = []
    k = params.horizon_k
    by_id: Dict[int, MaterializedRequest] = {r.request_id: r for r in requests}

    counts = Counter(a.request_id for a in schedule.assignments)
    valid: List[Assignment] = []
    for assignment in schedule.assignments:
        if assignment.request_id not in by_id:
            report.append(Violation("unknown_request", f"request {assignment.request_id} is not part of the instance"))
            continue
        if not 1 <= assignment.day <= 2 * k:
            report.append(Violation("day_range", f"request {assignment.request_id}: day {assignment.day} outside 1..{2 * k}"))
            continue
        valid.append(assignment)

    for request_id, count in sorted(counts.items()):
        if count > 1:
            report.append(Violation("single_assignment", f"request {request_id} assigned {count} times"))
    for request_id in schedule.unscheduled:
        if request_id in counts:
            report.append(Violation("single_assignment", f"request {request_id} is both assigned and unscheduled"))
    missing = sorted(set(by_id) - set(counts) - set(schedule.unscheduled))
    if missing:
        report.append(Violation("missing_request", f"requests neither assigned nor unscheduled: {missing[:10]}"))

    for assignment in valid:
        request = by_id[assignment.request_id]
        if request.is_physical:
            if assignment.debrief_day is not None:
                report.append(Violation("same_day_debrief", f"physical request {request.request_id} carries a debrief day"))
        elif assignment.debrief_day != assignment.day:
            report.append(Violation(
                "same_day_debrief",
                f"avatar request {request.request_id} served on day {assignment.day} "
                f"but debriefed on day {assignment.debrief_day}",
            ))

    ledger = build_ledger(valid, by_id, k)
    slot = params.slot_hours
    adjacency = conflicts.adjacency
    for day in ledger.days:
        user, avatar = ledger.user(day), ledger.avatar(day)
        present = ledger.alters(day)
        # день второго года повторяет загрузку зеркального дня; сообщаем только добавленное
        mirror = day - k if day > k else None
        if user > slot + TOLERANCE and (mirror is None or user != ledger.user(mirror)):
            report.append(Violation("user_cap", f"day {day}: user hours {user:.6g} exceed slot {slot:.6g}", user - slot))
        if avatar > slot + TOLERANCE and (mirror is None or avatar != ledger.avatar(mirror)):
            report.append(Violation("avatar_cap", f"day {day}: avatar hours {avatar:.6g} exceed slot {slot:.6g}", avatar - slot))
        inherited = ledger.alters(mirror) if mirror is not None else frozenset()
        for a in sorted(present):
            for b in sorted(adjacency.get(a, frozenset()) & present):
                if a < b and not {a, b} <= inherited:
                    report.append(Violation("conflict", f"alters {a} and {b} both physically scheduled on day {day}"))

    debrief_total = math.fsum(by_id[a.request_id].debrief for a in valid if not by_id[a.request_id].is_physical)
    if debrief_total > params.z_max + _relative(params.z_max):
        report.append(Violation(
            "z_max",
            f"total debrief {debrief_total:.6g} h exceeds Z_max {params.z_max:.6g} h",
            debrief_total - params.z_max,
        ))

    physical_hours: Dict[int, List[float]] = defaultdict(list)
    avatar_hours: Dict[int, List[float]] = defaultdict(list)
    for assignment in valid:
        request = by_id[assignment.request_id]
        (physical_hours if request.is_physical else avatar_hours)[request.alter_id].append(request.duration)
    for alter_id, x, y in zip(allocation.alter_ids, allocation.x, allocation.y):
        for code, target, placed in (
            ("physical_total", x, math.fsum(physical_hours[alter_id])),
            ("avatar_total", y, math.fsum(avatar_hours[alter_id])),
        ):
            gap = target - placed
            if abs(gap) > _relative(target):
                kind = "shortfall" if gap > 0 else "excess"
                report.append(Violation(code, f"alter {alter_id}: {kind} of {abs(gap):.6g} h against {target:.6g} h", gap))

    rebuilt = ledger
    if schedule.ledger.horizon_k != k:
        report.append(Violation("ledger_mismatch", f"stored ledger covers k={schedule.ledger.horizon_k}, expected {k}"))
        return report
    for day in ledger.days:
        if (
            abs(schedule.ledger.user(day) - rebuilt.user(day)) > _relative(rebuilt.user(day))
            or abs(schedule.ledger.avatar(day) - rebuilt.avatar(day)) > _relative(rebuilt.avatar(day))
            or schedule.ledger.alters(day) != rebuilt.alters(day)
        ):
            report.append(Violation("ledger_mismatch", f"day {day}: stored ledger differs from the assignments"))
            break
    return report
