#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Эталонный перебор по сетке для задачи распределения

Цель зависит только от суммы часов аватара, поэтому одномерный перебор этой
суммы по сетке и граничным точкам ограничений находит оптимум с точностью
до шага сетки.
"""

import math
from dataclasses import dataclass

import numpy as np
from loguru import logger

from src.allocator.solver import TimeAllocation, required_avatar_hours
from src.core.errors import InfeasibleAllocationError, InstanceTooLargeError, ParameterError
from src.core.network import EgoNetwork
from src.core.params import GAMMA_TOLERANCE, ModelParams

MAX_ALTERS = 10
MIN_RESOLUTION = 100
TOLERANCE = 1e-9


@dataclass(frozen=True)
class AllocationOracleResult:
    """Лучшая точка сетки; flat выставлен, если у всех допустимых сумм одинаковая цель"""

    y_sum: float
    allocation: TimeAllocation
    objective: float
    flat: bool
    grid_step: float


def allocation_oracle(network: EgoNetwork, params: ModelParams, resolution: int = 10_000) -> AllocationOracleResult:
    """Перебирает суммы часов аватара и оставляет допустимую с наименьшим X + gamma * Y

    Args:
        network: Эго-сеть не более чем из MAX_ALTERS альтеров
        params: Параметры модели
        resolution: Число интервалов сетки на [0, beta * X~]

    Returns:
        Лучшая найденная сумма с пропорциональным делением

    Raises:
        InstanceTooLargeError: Если в сети больше MAX_ALTERS альтеров
        ParameterError: Если resolution меньше MIN_RESOLUTION или заданы поальтерные beta
        InfeasibleAllocationError: Если ни одна сумма не удовлетворяет всем ограничениям
    """
    if len(network) > MAX_ALTERS:
        raise InstanceTooLargeError(f"allocation oracle is limited to {MAX_ALTERS} alters, got {len(network)}")
    if resolution < MIN_RESOLUTION:
        raise ParameterError("resolution", f"must be >= {MIN_RESOLUTION}, got {resolution}")
    if params.beta_overrides:
        raise ParameterError("beta_overrides", "the allocation oracle only supports a scalar beta")

    beta, gamma = params.beta, params.gamma
    demands = np.asarray(network.demands, dtype=float)
    baseline = network.baseline_capacity
    capacity = params.capacity_for(network)
    upper = beta * baseline
    budget_cap = min(params.avatar_budget_y, params.z_max / gamma)
    lower_bound = required_avatar_hours(network, params)

    boundary = [0.0, upper, params.avatar_budget_y, params.z_max / gamma]
    if math.isfinite(lower_bound):
        boundary.append(lower_bound)
    points = np.unique(np.clip(np.concatenate([np.linspace(0.0, upper, resolution + 1), boundary]), 0.0, upper))

    # пропорциональное деление каждой суммы, по строке на точку
    y = np.outer(points, demands / demands.sum())
    x = demands[np.newaxis, :] - y / beta
    used = x.sum(axis=1) + gamma * points
    feasible = (
        (x >= -TOLERANCE).all(axis=1)
        & (y <= beta * demands[np.newaxis, :] + TOLERANCE).all(axis=1)
        & (points <= budget_cap + TOLERANCE)
        & (used <= capacity + TOLERANCE * max(1.0, capacity))
    )
    if not feasible.any():
        raise InfeasibleAllocationError(lower_bound, min(budget_cap, upper), "no scanned avatar total is feasible")

    objective = np.where(feasible, baseline + (gamma - 1.0 / beta) * points, np.inf)
    best = int(np.argmin(objective))
    flat = abs(gamma - params.inverse_beta) <= GAMMA_TOLERANCE
    logger.debug(f"Allocation oracle: {int(feasible.sum())}/{len(points)} feasible points, best y_sum={points[best]:.6g}")

    allocation = TimeAllocation(
        alter_ids=network.ids,
        x=tuple(float(v) for v in np.maximum(x[best], 0.0)),
        y=tuple(float(v) for v in y[best]),
        gamma=gamma,
    )
    return AllocationOracleResult(
        y_sum=float(points[best]),
        allocation=allocation,
        objective=float(objective[best]),
        flat=flat,
        grid_step=upper / resolution,
    )
