#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Точное планирование минимальной стоимости методом ветвей и границ в глубину

Применимо только к крошечным экземплярам. Дни общие для двух лет: день k+i
второго года расходует те же часы пользователя и аватара и тот же набор
очно присутствующих альтеров, что и день i, и никогда не дешевле дня i,
поэтому поиск ветвится только по дням первого года без потери оптимума.
"""

import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from src.allocator.solver import TimeAllocation
from src.core.errors import InstanceMismatchError, InstanceTooLargeError
from src.core.network import ConflictGraph
from src.core.params import ModelParams
from src.scheduler.cost import day_cost
from src.scheduler.ledger import Assignment, Schedule
from src.social_requests.model import MaterializedRequest

MAX_REQUESTS = 8
MAX_HORIZON = 8
TOLERANCE = 1e-9


@dataclass(frozen=True)
class OracleResult:
    """Оптимум точного поиска; optimal_cost равен None, если допустимого расписания нет"""

    optimal_cost: Optional[int]
    optimal_assignment: Tuple[Assignment, ...]
    nodes_explored: int
    feasible: bool

    def to_schedule(self, requests: Sequence[MaterializedRequest], params: ModelParams) -> Schedule:
        return Schedule.from_assignments(self.optimal_assignment, requests, params)


def exact_schedule(
    requests: Sequence[MaterializedRequest],
    conflicts: ConflictGraph,
    params: ModelParams,
    allocation: TimeAllocation,
) -> OracleResult:
    """Минимальная суммарная социальная стоимость по всем допустимым назначениям дней

    Args:
        requests: Не более MAX_REQUESTS запросов с назначенным режимом
        conflicts: Граф конфликтов на альтерах
        params: Параметры модели с horizon_k <= MAX_HORIZON
        allocation: Распределение, по которому назначены режимы

    Returns:
        Оптимум и число просмотренных узлов поиска

    Raises:
        InstanceTooLargeError: Если экземпляр превышает ограничение размера
        InstanceMismatchError: Если запрос ссылается на альтера вне распределения
    """
    if len(requests) > MAX_REQUESTS or params.horizon_k > MAX_HORIZON:
        raise InstanceTooLargeError(
            f"exact search is limited to {MAX_REQUESTS} requests and k <= {MAX_HORIZON}, "
            f"got {len(requests)} requests and k = {params.horizon_k}"
        )
    stray = sorted({r.alter_id for r in requests} - set(allocation.alter_ids))
    if stray:
        raise InstanceMismatchError(f"requests refer to alters missing from the allocation: {stray}")

    k = params.horizon_k
    slot = params.slot_hours + TOLERANCE
    z_max = params.z_max + TOLERANCE
    adjacency = conflicts.adjacency

    order = sorted(requests, key=lambda r: (r.window_end - r.window_start, r.request_id))
    candidates: Dict[int, List[Tuple[int, int]]] = {
        r.request_id: sorted((day_cost(r.window_start, r.window_end, d, k), d) for d in range(1, k + 1))
        for r in order
    }

    user = [0.0] * (k + 1)
    avatar = [0.0] * (k + 1)
    present: List[Counter] = [Counter() for _ in range(k + 1)]
    debrief = [0.0]
    chosen: Dict[int, int] = {}
    best: Dict[str, object] = {"cost": math.inf, "days": None}
    nodes = 0

    def fits(request: MaterializedRequest, day: int) -> bool:
        if request.is_physical:
            if user[day] + request.duration > slot:
                return False
            return not any(present[day][other] for other in adjacency.get(request.alter_id, ()))
        return (
            avatar[day] + request.duration <= slot
            and user[day] + request.debrief <= slot
            and debrief[0] + request.debrief <= z_max
        )

    def search(index: int, cost: int) -> None:
        nonlocal nodes
        nodes += 1
        if index == len(order):
            best["cost"], best["days"] = cost, dict(chosen)
            return
        request = order[index]
        for day_cost_value, day in candidates[request.request_id]:
            total = cost + day_cost_value
            if total >= best["cost"]:
                break
            if not fits(request, day):
                continue
            saved = (user[day], avatar[day], debrief[0])
            if request.is_physical:
                user[day] += request.duration
                present[day][request.alter_id] += 1
            else:
                avatar[day] += request.duration
                user[day] += request.debrief
                debrief[0] += request.debrief
            chosen[request.request_id] = day
            search(index + 1, total)
            del chosen[request.request_id]
            user[day], avatar[day], debrief[0] = saved
            if request.is_physical:
                present[day][request.alter_id] -= 1

    search(0, 0)

    if best["days"] is None:
        logger.debug(f"Exact search: infeasible after {nodes} nodes")
        return OracleResult(optimal_cost=None, optimal_assignment=(), nodes_explored=nodes, feasible=False)

    by_id = {r.request_id: r for r in requests}
    days: Dict[int, int] = best["days"]
    assignment = tuple(
        Assignment(rid, day, None if by_id[rid].is_physical else day)
        for rid, day in sorted(days.items())
    )
    logger.debug(f"Exact search: optimum {best['cost']} after {nodes} nodes")
    return OracleResult(
        optimal_cost=int(best["cost"]),
        optimal_assignment=assignment,
        nodes_explored=nodes,
        feasible=True,
    )
