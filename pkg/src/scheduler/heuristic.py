#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Последовательное планирование запросов в отсортированном порядке

Сначала размещаются очные запросы, затем запросы аватара, дни первого года
обходятся по возрастанию. Не поместившиеся запросы повторно пробуются на
зеркальных днях второго года, которые начинаются с итоговой загрузки первого.
Внутри дня допустимые запросы перебираются по возрастанию (cost, alter_id, request_id).
"""

from collections import defaultdict
from typing import Callable, Dict, List, Sequence

from loguru import logger

from src.allocator.solver import TimeAllocation
from src.core.errors import InstanceMismatchError
from src.core.network import ConflictGraph
from src.core.params import ModelParams
from src.scheduler.cost import day_cost
from src.scheduler.ledger import Assignment, DayLedger, Schedule
from src.social_requests.model import MaterializedRequest

TOLERANCE = 1e-9

Fits = Callable[[MaterializedRequest, int], bool]
Place = Callable[[MaterializedRequest, int], None]


class _DayState:
    """Изменяемая загрузка дней во время проходов"""

    def __init__(self, params: ModelParams, conflicts: ConflictGraph):
        size = 2 * params.horizon_k + 1
        self.k = params.horizon_k
        self.slot = params.slot_hours + TOLERANCE
        self.z_max = params.z_max + TOLERANCE
        self.adjacency = conflicts.adjacency
        self.user = [0.0] * size
        self.avatar = [0.0] * size
        self.present: List[set] = [set() for _ in range(size)]
        self.debrief_total = 0.0
        self.assignments: List[Assignment] = []

    def physical_fits(self, request: MaterializedRequest, day: int) -> bool:
        if self.user[day] + request.duration > self.slot:
            return False
        return self.present[day].isdisjoint(self.adjacency.get(request.alter_id, ()))

    def place_physical(self, request: MaterializedRequest, day: int) -> None:
        self.user[day] += request.duration
        self.present[day].add(request.alter_id)
        self.assignments.append(Assignment(request.request_id, day))

    def avatar_fits(self, request: MaterializedRequest, day: int) -> bool:
        return (
            self.avatar[day] + request.duration <= self.slot
            and self.user[day] + request.debrief <= self.slot
            and self.debrief_total + request.debrief <= self.z_max
        )

    def place_avatar(self, request: MaterializedRequest, day: int) -> None:
        self.avatar[day] += request.duration
        self.user[day] += request.debrief
        self.debrief_total += request.debrief
        self.assignments.append(Assignment(request.request_id, day, debrief_day=day))

    def mirror_year_one(self) -> None:
        for i in range(1, self.k + 1):
            self.user[self.k + i] = self.user[i]
            self.avatar[self.k + i] = self.avatar[i]
            self.present[self.k + i] = set(self.present[i])


def _sweep(
    pending: Sequence[MaterializedRequest],
    first_day: int,
    last_day: int,
    horizon_k: int,
    fits: Fits,
    place: Place,
) -> List[MaterializedRequest]:
    """Размещает запросы в самый дешевый допустимый день в [first_day, last_day]

    Returns:
        Неразмещенные запросы
    """
    entries: Dict[int, List[MaterializedRequest]] = defaultdict(list)
    if last_day <= horizon_k:
        for request in pending:
            in_window = any(fits(request, d) for d in range(request.window_start, horizon_k + 1))
            entries[request.window_start if in_window else first_day].append(request)
    else:
        entries[first_day] = list(pending)

    pool: List[MaterializedRequest] = []
    for day in range(first_day, last_day + 1):
        pool.extend(entries.pop(day, ()))
        if not pool:
            continue
        pool.sort(key=lambda r: (day_cost(r.window_start, r.window_end, day, horizon_k), r.alter_id, r.request_id))
        remaining = []
        for request in pool:
            if fits(request, day):
                place(request, day)
            else:
                remaining.append(request)
        pool = remaining
    return pool


def schedule(
    requests: Sequence[MaterializedRequest],
    conflicts: ConflictGraph,
    params: ModelParams,
    allocation: TimeAllocation,
) -> Schedule:
    """Планирует запросы на двухлетнем горизонте

    Args:
        requests: Запросы с режимом, назначенным по allocation
        conflicts: Граф конфликтов на альтерах
        params: Параметры модели
        allocation: Распределение, по которому назначены режимы

    Returns:
        Расписание; запросы, не поместившиеся никуда, попадают в unscheduled

    Raises:
        InstanceMismatchError: Если запрос ссылается на альтера вне распределения
    """
    known = set(allocation.alter_ids)
    stray = sorted({r.alter_id for r in requests} - known)
    if stray:
        raise InstanceMismatchError(f"requests refer to alters missing from the allocation: {stray[:10]}")

    k = params.horizon_k
    state = _DayState(params, conflicts)
    physical = [r for r in requests if r.is_physical]
    avatar = [r for r in requests if not r.is_physical]

    physical = _sweep(physical, 1, k, k, state.physical_fits, state.place_physical)
    avatar = _sweep(avatar, 1, k, k, state.avatar_fits, state.place_avatar)
    year_one_count = len(state.assignments)

    state.mirror_year_one()
    physical = _sweep(physical, k + 1, 2 * k, k, state.physical_fits, state.place_physical)
    avatar = _sweep(avatar, k + 1, 2 * k, k, state.avatar_fits, state.place_avatar)

    unscheduled = sorted(r.request_id for r in physical + avatar)
    logger.debug(
        f"Scheduled {len(state.assignments)}/{len(requests)} requests "
        f"(year 1: {year_one_count}, year 2: {len(state.assignments) - year_one_count})"
    )
    if unscheduled:
        logger.warning(f"{len(unscheduled)} requests could not be scheduled in either year")

    ordered = tuple(sorted(state.assignments, key=lambda a: (a.request_id, a.day)))
    return Schedule(
        assignments=ordered,
        ledger=DayLedger.from_lists(k, state.user, state.avatar, state.present),
        unscheduled=tuple(unscheduled),
        debrief_total=state.debrief_total,
    )
