#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Типы значений для эго-сети и графа конфликтов
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, Tuple

from src.core.errors import ParameterError


class Layer(str, Enum):
    """Концентрические слои эго-сети, от внутреннего к внешнему"""

    SUPPORT = "support"
    SYMPATHY = "sympathy"
    ACTIVE = "active"


@dataclass(frozen=True)
class Alter:
    """Участник эго-сети и его годовая потребность в часах"""

    id: int
    layer: Layer
    annual_demand: float

    def __post_init__(self):
        if not self.annual_demand > 0:
            raise ParameterError("annual_demand", f"alter {self.id} must demand > 0 hours, got {self.annual_demand}")


@dataclass(frozen=True)
class EgoNetwork:
    """Упорядоченные альтеры одного эго; baseline_capacity это X~ = сумма потребностей"""

    alters: Tuple[Alter, ...]
    baseline_capacity: float = field(init=False)

    def __post_init__(self):
        alters = tuple(self.alters)
        ids = [alter.id for alter in alters]
        if len(set(ids)) != len(ids):
            raise ParameterError("alters", "alter ids must be unique")
        object.__setattr__(self, "alters", alters)
        object.__setattr__(self, "baseline_capacity", math.fsum(a.annual_demand for a in alters))

    def __len__(self) -> int:
        return len(self.alters)

    def __iter__(self) -> Iterator[Alter]:
        return iter(self.alters)

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(alter.id for alter in self.alters)

    @property
    def demands(self) -> Tuple[float, ...]:
        return tuple(alter.annual_demand for alter in self.alters)

    def layer_sizes(self) -> Dict[Layer, int]:
        sizes = {layer: 0 for layer in Layer}
        for alter in self.alters:
            sizes[alter.layer] += 1
        return sizes


@dataclass(frozen=True)
class ConflictGraph:
    """Неориентированный граф на id альтеров, запрещающий очные встречи в один день

    Ребра хранятся как пары (меньший, больший). Конструктор не отбрасывает
    некорректные ребра, их сообщает validate_instance.
    """

    n: int
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self):
        normalized = frozenset((min(i, j), max(i, j)) for i, j in self.edges)
        object.__setattr__(self, "edges", normalized)

    @classmethod
    def empty(cls, n: int) -> "ConflictGraph":
        return cls(n=n, edges=frozenset())

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Tuple[int, int]]) -> "ConflictGraph":
        return cls(n=n, edges=frozenset(pairs))

    @property
    def max_edges(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def density(self) -> float:
        return len(self.edges) / self.max_edges if self.max_edges else 0.0

    @cached_property
    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        neighbors: Dict[int, set] = {v: set() for v in range(self.n)}
        for i, j in self.edges:
            neighbors.setdefault(i, set()).add(j)
            neighbors.setdefault(j, set()).add(i)
        return {v: frozenset(adj) for v, adj in neighbors.items()}

    def neighbors(self, alter_id: int) -> FrozenSet[int]:
        return self.adjacency.get(alter_id, frozenset())

    def conflicts(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def sorted_edges(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self.edges))
