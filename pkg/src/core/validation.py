#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Проверка экземпляра с отчетом о нарушениях
"""

from dataclasses import dataclass
from typing import List, Optional

from src.core.network import ConflictGraph, EgoNetwork
from src.core.params import ModelParams

TOLERANCE = 1e-9


@dataclass(frozen=True)
class Violation:
    """Одно нарушенное ограничение; residual - величина превышения"""

    code: str
    message: str
    residual: Optional[float] = None

    def __str__(self) -> str:
        if self.residual is None:
            return f"[{self.code}] {self.message}"
        return f"[{self.code}] {self.message} (residual {self.residual:.6g})"


def validate_instance(network: EgoNetwork, conflicts: ConflictGraph, params: ModelParams) -> List[Violation]:
    """Проверяет согласованность сети, ее графа конфликтов и параметров

    Args:
        network: Эго-сеть
        conflicts: Граф конфликтов на альтерах сети
        params: Параметры модели

    Returns:
        Список нарушений, пустой для корректного экземпляра
    """
    report: List[Violation] = []
    n = len(network)

    if sorted(network.ids) != list(range(n)):
        report.append(Violation("alter_ids", f"alter ids must be exactly 0..{n - 1}"))

    capacity = params.capacity_for(network)
    if capacity > network.baseline_capacity + TOLERANCE:
        report.append(Violation(
            "capacity_exceeds_baseline",
            f"capacity exceeds baseline: x_prime {capacity:.6g} > baseline {network.baseline_capacity:.6g}",
            capacity - network.baseline_capacity,
        ))

    if conflicts.n != n:
        report.append(Violation("conflict_size", f"conflict graph has n={conflicts.n}, network has {n} alters"))
    if len(conflicts.edges) > conflicts.max_edges:
        report.append(Violation("conflict_edge_count", f"{len(conflicts.edges)} edges exceed n(n-1)/2 = {conflicts.max_edges}"))
    for i, j in conflicts.sorted_edges():
        if i == j:
            report.append(Violation("self_loop", f"self-loop on alter {i}"))
        if i < 0 or j >= conflicts.n:
            report.append(Violation("edge_endpoint", f"edge ({i}, {j}) has an endpoint outside 0..{conflicts.n - 1}"))

    for name in ("avatar_budget_y", "z_max", "x_prime"):
        value = getattr(params, name)
        if value is not None and value < 0:
            report.append(Violation("negative_budget", f"{name} must be >= 0", -value))

    if params.beta_overrides:
        report.append(Violation("beta_overrides", "per-alter beta overrides are not supported by the allocator"))

    return report
