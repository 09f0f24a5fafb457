#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Статистика слоев и распределение размеров генерируемых эго-сетей
"""

from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np
from scipy.stats import norm

from src.core.errors import ParameterError
from src.core.network import Layer

LAYER_ORDER: Tuple[Layer, ...] = (Layer.SUPPORT, Layer.SYMPATHY, Layer.ACTIVE)


@dataclass(frozen=True)
class LayerStats:
    """Накопленные размеры слоев и годовые часы на альтера, начиная с внутреннего слоя"""

    cumulative_size_means: Tuple[float, float, float] = (4.6, 14.3, 132.5)
    per_alter_hours: Tuple[float, float, float] = (74.0, 38.72, 8.81)

    def __post_init__(self):
        sizes, hours = self.cumulative_size_means, self.per_alter_hours
        if len(sizes) != len(LAYER_ORDER) or len(hours) != len(LAYER_ORDER):
            raise ParameterError("layer_stats", f"exactly {len(LAYER_ORDER)} layers are modelled")
        if not all(a < b for a, b in zip(sizes, sizes[1:])) or sizes[0] <= 0:
            raise ParameterError("cumulative_size_means", "must be positive and strictly increasing")
        if not all(a > b for a, b in zip(hours, hours[1:])) or hours[-1] <= 0:
            raise ParameterError("per_alter_hours", "must be positive and strictly decreasing outwards")

    @property
    def marginal_sizes(self) -> Tuple[float, ...]:
        """Размеры каждого кольца отдельно (слои вложены)"""
        sizes = self.cumulative_size_means
        return (sizes[0],) + tuple(b - a for a, b in zip(sizes, sizes[1:]))

    def hours_by_layer(self) -> Dict[Layer, float]:
        return dict(zip(LAYER_ORDER, self.per_alter_hours))

    def expected_capacity(self) -> float:
        """Годовые часы эго среднего размера: сумма размер кольца * часы"""
        return float(np.dot(self.marginal_sizes, self.per_alter_hours))


@dataclass(frozen=True)
class NetworkSizeModel:
    """Составное нормальное распределение вокруг медианы, усеченное до [lower, upper]

    Левый и правый разброс подобраны так, чтобы 10-й и 90-й перцентили
    попадали на p10 и p90; распределение размеров скошено влево.
    """

    p10: float = 68.0
    median: float = 126.0
    p90: float = 170.0
    lower: int = 20
    upper: int = 250

    def __post_init__(self):
        if not self.p10 < self.median < self.p90:
            raise ParameterError("size_model", "need p10 < median < p90")
        if not self.lower <= self.p10 or not self.p90 <= self.upper:
            raise ParameterError("size_model", "truncation bounds must enclose p10 and p90")

    @property
    def spreads(self) -> Tuple[float, float]:
        z90 = norm.ppf(0.9)
        return (self.median - self.p10) / z90, (self.p90 - self.median) / z90

    def sample(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """Выбирает `count` целых размеров сети"""
        left, right = self.spreads
        sizes = np.empty(0, dtype=np.int64)
        while sizes.size < count:
            z = norm.ppf(rng.random(count))
            raw = self.median + np.where(z < 0, left, right) * z
            rounded = np.rint(raw)
            keep = rounded[(rounded >= self.lower) & (rounded <= self.upper)].astype(np.int64)
            sizes = np.concatenate([sizes, keep])
        return sizes[:count]


DEFAULT_LAYER_STATS = LayerStats()
DEFAULT_SIZE_MODEL = NetworkSizeModel()
