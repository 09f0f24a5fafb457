#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Генераторы эго-сетей и графов конфликтов с фиксированным зерном
"""

import math
from typing import List, Optional

import numpy as np
from loguru import logger

from src.core.errors import ParameterError
from src.core.network import Alter, ConflictGraph, EgoNetwork
from src.egogen.layers import (
    DEFAULT_LAYER_STATS,
    DEFAULT_SIZE_MODEL,
    LAYER_ORDER,
    LayerStats,
    NetworkSizeModel,
)
from src.utils.seeding import make_rng

DEFAULT_DEMAND_SIGMA = 0.25
MIN_NETWORK_SIZE = 3


def apportion_layers(n: int, stats: LayerStats = DEFAULT_LAYER_STATS) -> List[int]:
    """Распределяет n альтеров по кольцам методом наибольших остатков

    В каждом кольце остается хотя бы один альтер, поэтому n >= 3.
    """
    weights = np.asarray(stats.marginal_sizes, dtype=float)
    quotas = n * weights / weights.sum()
    counts = np.floor(quotas).astype(int)
    # устойчивая сортировка оставляет внутренние кольца первыми при равных остатках
    order = np.argsort(-(quotas - counts), kind="stable")
    for idx in order[: n - int(counts.sum())]:
        counts[idx] += 1

    for idx in range(len(counts)):
        if counts[idx] == 0:
            counts[int(np.argmax(counts))] -= 1
            counts[idx] = 1
    return [int(c) for c in counts]


def generate_ego_network(
    seed: int,
    stats: LayerStats = DEFAULT_LAYER_STATS,
    size_override: Optional[int] = None,
    demand_sigma: float = DEFAULT_DEMAND_SIGMA,
    size_model: NetworkSizeModel = DEFAULT_SIZE_MODEL,
) -> EgoNetwork:
    """Генерирует эго-сеть из трех колец

    Args:
        seed: Зерно генератора
        stats: Размеры слоев и часы на альтера
        size_override: Фиксированное число альтеров; при None выбирается из size_model
        demand_sigma: Sigma мультипликативного логнормального шума потребностей, 0 отключает шум
        size_model: Распределение числа альтеров

    Returns:
        Сеть с альтерами в порядке support, sympathy, active и id 0..n-1

    Raises:
        ParameterError: Если size_override < 3 или demand_sigma < 0
    """
    if size_override is not None and size_override < MIN_NETWORK_SIZE:
        raise ParameterError("size_override", f"must be >= {MIN_NETWORK_SIZE}, got {size_override}")
    if demand_sigma < 0:
        raise ParameterError("demand_sigma", f"must be >= 0, got {demand_sigma}")

    rng = make_rng(seed)
    n = size_override if size_override is not None else int(size_model.sample(rng, 1)[0])
    counts = apportion_layers(n, stats)

    means = np.repeat(np.asarray(stats.per_alter_hours, dtype=float), counts)
    if demand_sigma > 0:
        # мультипликативный шум с сохранением среднего
        means = means * rng.lognormal(mean=-demand_sigma ** 2 / 2, sigma=demand_sigma, size=n)

    layers = [layer for layer, count in zip(LAYER_ORDER, counts) for _ in range(count)]
    alters = tuple(Alter(id=i, layer=layer, annual_demand=float(hours)) for i, (layer, hours) in enumerate(zip(layers, means)))
    network = EgoNetwork(alters=alters)
    logger.debug(f"Generated ego network seed={seed} n={n} layers={counts} capacity={network.baseline_capacity:.2f}h")
    return network


def generate_conflict_graph(seed: int, n: int, density: float) -> ConflictGraph:
    """Равномерно выбирает round(density * n(n-1)/2) различных пар альтеров

    Raises:
        ParameterError: Если density вне [0, 1] или n < 1
    """
    if not 0.0 <= density <= 1.0:
        raise ParameterError("density", f"must be in [0, 1], got {density}")
    if n < 1:
        raise ParameterError("n", f"must be >= 1, got {n}")

    max_edges = n * (n - 1) // 2
    m = int(math.floor(density * max_edges + 0.5))
    if m == 0:
        return ConflictGraph.empty(n)

    rows, cols = np.triu_indices(n, k=1)
    picked = make_rng(seed).choice(max_edges, size=m, replace=False)
    edges = frozenset((int(rows[p]), int(cols[p])) for p in picked)
    return ConflictGraph(n=n, edges=edges)


def sample_network_sizes(seed: int, count: int, size_model: NetworkSizeModel = DEFAULT_SIZE_MODEL) -> np.ndarray:
    """Выбирает пачку размеров сети из распределения, которое использует generate_ego_network"""
    if count < 1:
        raise ParameterError("count", f"must be >= 1, got {count}")
    return size_model.sample(make_rng(seed), count)


def scale_network(network: EgoNetwork, target_capacity: float) -> EgoNetwork:
    """Масштабирует все потребности так, чтобы базовая емкость равнялась target_capacity"""
    if not target_capacity > 0:
        raise ParameterError("target_capacity", f"must be > 0, got {target_capacity}")
    factor = target_capacity / network.baseline_capacity
    return EgoNetwork(alters=tuple(
        Alter(id=a.id, layer=a.layer, annual_demand=a.annual_demand * factor) for a in network.alters
    ))
