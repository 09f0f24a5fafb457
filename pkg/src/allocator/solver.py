#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Аналитический решатель годового распределения времени

После подстановки x_v = x~_v - y_v / beta цель sum_v x_v + gamma * y_v
становится X~ + (gamma - 1/beta) * sum_v y_v, и важна только сумма часов
аватара: ноль при gamma > 1/beta, иначе максимум, допустимый ограничениями.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

import numpy as np
from loguru import logger

from src.core.errors import InfeasibleAllocationError, ParameterError
from src.core.network import EgoNetwork
from src.core.params import ModelParams
from src.core.validation import Violation

TOLERANCE = 1e-9


class AllocationStrategy(str, Enum):
    """Как оптимальная сумма часов аватара делится между альтерами"""

    PROPORTIONAL = "proportional"
    GREEDY = "greedy"


@dataclass(frozen=True)
class TimeAllocation:
    """Очные часы x_v и часы аватара y_v каждого альтера за год"""

    alter_ids: Tuple[int, ...]
    x: Tuple[float, ...]
    y: Tuple[float, ...]
    gamma: float

    def __post_init__(self):
        if not len(self.alter_ids) == len(self.x) == len(self.y):
            raise ParameterError("allocation", "alter_ids, x and y must have equal length")

    @property
    def x_total(self) -> float:
        return math.fsum(self.x)

    @property
    def y_sum(self) -> float:
        return math.fsum(self.y)

    @property
    def z_total(self) -> float:
        """Суммарное время пересказа Z = gamma * sum_v y_v"""
        return self.gamma * self.y_sum

    def as_dict(self) -> dict:
        return {v: (x, y) for v, x, y in zip(self.alter_ids, self.x, self.y)}

    def for_alter(self, alter_id: int) -> Tuple[float, float]:
        index = self.alter_ids.index(alter_id)
        return self.x[index], self.y[index]


def avatar_cap(network: EgoNetwork, params: ModelParams) -> float:
    """min{Y, Z_max / gamma, sum_v beta * x~_v}"""
    return min(params.avatar_budget_y, params.z_max / params.gamma, params.beta * network.baseline_capacity)


def required_avatar_hours(network: EgoNetwork, params: ModelParams) -> float:
    """Минимальная сумма часов аватара, при которой X + Z <= X~'; inf, если такой нет"""
    shortfall = network.baseline_capacity - params.capacity_for(network)
    if shortfall <= TOLERANCE:
        return 0.0
    saving_rate = params.inverse_beta - params.gamma
    if saving_rate <= 0:
        return math.inf
    return shortfall / saving_rate


def _split(y_sum: float, demands: np.ndarray, beta: float, strategy: AllocationStrategy) -> np.ndarray:
    if y_sum <= 0:
        return np.zeros_like(demands)
    if strategy is AllocationStrategy.PROPORTIONAL:
        return y_sum * demands / demands.sum()

    y = np.zeros_like(demands)
    remaining = y_sum
    for index in sorted(range(len(demands)), key=lambda i: (-demands[i], i)):
        take = min(remaining, beta * demands[index])
        y[index] = take
        remaining -= take
        if remaining <= 0:
            break
    return y


def solve_allocation(
    network: EgoNetwork,
    params: ModelParams,
    strategy: AllocationStrategy = AllocationStrategy.PROPORTIONAL,
) -> TimeAllocation:
    """Оптимальное годовое распределение очных часов и часов аватара

    Args:
        network: Эго-сеть
        params: Параметры модели
        strategy: Способ деления суммы часов аватара между альтерами

    Returns:
        Оптимальное распределение

    Raises:
        ParameterError: Если заданы поальтерные значения beta
        InfeasibleAllocationError: Если ограничение X~' < X~ невыполнимо
    """
    if params.beta_overrides:
        raise ParameterError("beta_overrides", "the analytic allocator only supports a scalar beta")

    demands = np.asarray(network.demands, dtype=float)
    cap = avatar_cap(network, params)
    lower_bound = required_avatar_hours(network, params)

    if params.avatar_beneficial:
        if lower_bound > cap + TOLERANCE:
            raise InfeasibleAllocationError(lower_bound, cap)
        y_sum = cap
    else:
        if lower_bound > 0:
            raise InfeasibleAllocationError(lower_bound, cap, "gamma > 1/beta, the avatar cannot save time")
        y_sum = 0.0

    y = _split(y_sum, demands, params.beta, strategy)
    x = np.maximum(demands - y / params.beta, 0.0)
    logger.debug(
        f"Allocation: gamma={params.gamma:.4g} 1/beta={params.inverse_beta:.4g} "
        f"case={'A' if params.avatar_beneficial else 'B'} cap={cap:.4g} y_sum={y_sum:.4g}"
    )
    return TimeAllocation(
        alter_ids=network.ids,
        x=tuple(float(v) for v in x),
        y=tuple(float(v) for v in y),
        gamma=params.gamma,
    )


def allocation_objective(allocation: TimeAllocation) -> float:
    """sum_v x_v + gamma * y_v"""
    return allocation.x_total + allocation.z_total


def spare_time(allocation: TimeAllocation, network: EgoNetwork, params: ModelParams) -> float:
    """Часы пользователя, освобожденные аватаром: X~ - X - Z"""
    return network.baseline_capacity - allocation.x_total - params.gamma * allocation.y_sum


def check_feasibility(allocation: TimeAllocation, network: EgoNetwork, params: ModelParams) -> List[Violation]:
    """Проверяет все ограничения распределения и возвращает нарушенные с величиной нарушения"""
    if tuple(allocation.alter_ids) != network.ids:
        return [Violation("alter_mismatch", "allocation and network alter ids differ")]

    report: List[Violation] = []
    beta = params.beta
    for alter, x, y in zip(network.alters, allocation.x, allocation.y):
        demand = alter.annual_demand
        if x < -TOLERANCE:
            report.append(Violation("nonnegative", f"alter {alter.id}: x = {x:.6g} < 0", -x))
        if y < -TOLERANCE:
            report.append(Violation("avatar_bounds", f"alter {alter.id}: y = {y:.6g} < 0", -y))
        elif y > beta * demand + TOLERANCE:
            report.append(Violation("avatar_bounds", f"alter {alter.id}: y = {y:.6g} > beta * demand", y - beta * demand))
        balance = x + y / beta - demand
        if abs(balance) > TOLERANCE:
            report.append(Violation("presence_balance", f"alter {alter.id}: x + y/beta differs from demand", balance))

    y_sum = allocation.y_sum
    budget_cap = min(params.avatar_budget_y, params.z_max / params.gamma)
    if y_sum > budget_cap + TOLERANCE:
        binding = "Y" if params.avatar_budget_y <= params.z_max / params.gamma else "Z_max / gamma"
        report.append(Violation("avatar_cap", f"avatar total {y_sum:.6g} exceeds {binding} = {budget_cap:.6g}", y_sum - budget_cap))

    capacity = params.capacity_for(network)
    baseline = network.baseline_capacity
    saving = (params.gamma - params.inverse_beta) * y_sum - (capacity - baseline)
    if saving > TOLERANCE:
        report.append(Violation("saving_requirement", "avatar hours do not save enough user time", saving))
    used = allocation.x_total + params.gamma * y_sum
    if used > capacity + TOLERANCE * max(1.0, capacity):
        report.append(Violation("capacity", f"X + Z = {used:.6g} exceeds capacity {capacity:.6g}", used - capacity))
    return report
