#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Оценка социальной стоимости расписания
"""

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from src.allocator.solver import TimeAllocation, spare_time
from src.core.network import EgoNetwork
from src.core.params import ModelParams
from src.scheduler.cost import social_cost
from src.scheduler.ledger import Schedule
from src.social_requests.model import MaterializedRequest


@dataclass(frozen=True)
class CostReport:
    """Сводная социальная стоимость одного расписания

    per_alter_cost идет в порядке альтеров сети; per_request_cost содержит
    пары (request_id, cost) запланированных запросов в порядке id.
    """

    total_cost: int
    per_alter_cost: Tuple[int, ...]
    per_request_cost: Tuple[Tuple[int, int], ...]
    spare_time: float
    n_year1: int
    n_year2: int
    n_unscheduled: int

    @property
    def n_alters(self) -> int:
        return len(self.per_alter_cost)

    @property
    def mean_cost_per_alter(self) -> float:
        if not self.per_alter_cost:
            return 0.0
        return self.total_cost / len(self.per_alter_cost)

    @property
    def n_scheduled(self) -> int:
        return self.n_year1 + self.n_year2


def evaluate(
    schedule: Schedule,
    requests: Sequence[MaterializedRequest],
    allocation: TimeAllocation,
    network: EgoNetwork,
    params: ModelParams,
) -> CostReport:
    """Суммирует социальную стоимость всех назначений и добавляет свободное время"""
    by_id = {r.request_id: r for r in requests}
    k = params.horizon_k
    per_alter: Dict[int, int] = {v: 0 for v in network.ids}
    per_request = []
    year_one = 0
    for assignment in schedule.assignments:
        request = by_id[assignment.request_id]
        cost = social_cost(request.window, assignment.day, k)
        per_request.append((request.request_id, cost))
        per_alter[request.alter_id] = per_alter.get(request.alter_id, 0) + cost
        if assignment.day <= k:
            year_one += 1

    per_request.sort()
    return CostReport(
        total_cost=sum(cost for _, cost in per_request),
        per_alter_cost=tuple(per_alter[v] for v in network.ids),
        per_request_cost=tuple(per_request),
        spare_time=spare_time(allocation, network, params),
        n_year1=year_one,
        n_year2=len(per_request) - year_one,
        n_unscheduled=len(schedule.unscheduled),
    )
