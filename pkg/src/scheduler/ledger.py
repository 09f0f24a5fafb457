#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Расписания и журналы загрузки по дням
"""

import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.core.params import ModelParams
from src.social_requests.model import MaterializedRequest


@dataclass(frozen=True)
class Assignment:
    """Запрос, обслуженный в эффективный день; пересказ запроса аватара идет в debrief_day"""

    request_id: int
    day: int
    debrief_day: Optional[int] = None


@dataclass(frozen=True)
class DayLedger:
    """Загрузка каждого эффективного дня 1..2k

    День k+i второго года включает отраженную итоговую загрузку дня i первого года.
    """

    horizon_k: int
    user_hours: Tuple[float, ...]
    avatar_hours: Tuple[float, ...]
    physical_alters: Tuple[FrozenSet[int], ...]

    @property
    def days(self) -> range:
        return range(1, 2 * self.horizon_k + 1)

    def user(self, day: int) -> float:
        return self.user_hours[day - 1]

    def avatar(self, day: int) -> float:
        return self.avatar_hours[day - 1]

    def alters(self, day: int) -> FrozenSet[int]:
        return self.physical_alters[day - 1]

    @classmethod
    def from_lists(cls, horizon_k: int, user: List[float], avatar: List[float], present: List[set]) -> "DayLedger":
        """Строит журнал из рабочих списков по дням (индекс 0 не используется)"""
        return cls(
            horizon_k=horizon_k,
            user_hours=tuple(user[1:]),
            avatar_hours=tuple(avatar[1:]),
            physical_alters=tuple(frozenset(s) for s in present[1:]),
        )


def build_ledger(
    assignments: Iterable[Assignment],
    requests_by_id: Dict[int, MaterializedRequest],
    horizon_k: int,
) -> DayLedger:
    """Пересчитывает журнал, следующий из набора назначений"""
    size = 2 * horizon_k + 1
    user = [0.0] * size
    avatar = [0.0] * size
    present: List[set] = [set() for _ in range(size)]

    year_one, year_two = [], []
    for assignment in assignments:
        request = requests_by_id.get(assignment.request_id)
        if request is None or not 1 <= assignment.day <= 2 * horizon_k:
            continue
        (year_one if assignment.day <= horizon_k else year_two).append((assignment, request))

    def apply(assignment: Assignment, request: MaterializedRequest) -> None:
        day = assignment.day
        if request.is_physical:
            user[day] += request.duration
            present[day].add(request.alter_id)
        else:
            avatar[day] += request.duration
            debrief_day = assignment.debrief_day or day
            if 1 <= debrief_day < size:
                user[debrief_day] += request.debrief

    for assignment, request in year_one:
        apply(assignment, request)
    for i in range(1, horizon_k + 1):
        user[horizon_k + i] = user[i]
        avatar[horizon_k + i] = avatar[i]
        present[horizon_k + i] = set(present[i])
    for assignment, request in year_two:
        apply(assignment, request)

    return DayLedger.from_lists(horizon_k, user, avatar, present)


@dataclass(frozen=True)
class Schedule:
    """Назначения дней на двухлетнем горизонте и неразмещенные запросы"""

    assignments: Tuple[Assignment, ...]
    ledger: DayLedger
    unscheduled: Tuple[int, ...]
    debrief_total: float

    @classmethod
    def from_assignments(
        cls,
        assignments: Sequence[Assignment],
        requests: Sequence[MaterializedRequest],
        params: ModelParams,
        unscheduled: Sequence[int] = (),
    ) -> "Schedule":
        by_id = {r.request_id: r for r in requests}
        ordered = tuple(sorted(assignments, key=lambda a: (a.request_id, a.day)))
        debriefs = math.fsum(
            by_id[a.request_id].debrief for a in ordered
            if a.request_id in by_id and not by_id[a.request_id].is_physical
        )
        return cls(
            assignments=ordered,
            ledger=build_ledger(ordered, by_id, params.horizon_k),
            unscheduled=tuple(sorted(unscheduled)),
            debrief_total=debriefs,
        )

    def day_of(self, request_id: int) -> Optional[int]:
        for assignment in self.assignments:
            if assignment.request_id == request_id:
                return assignment.day
        return None
