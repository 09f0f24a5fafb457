#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Свободное время как функция gamma при фиксированных бюджетах аватара
"""

from pathlib import Path
from typing import Sequence, Union

import pandas as pd
from loguru import logger

from src.allocator.solver import solve_allocation, spare_time
from src.core.errors import ExperimentError
from src.core.network import EgoNetwork
from src.core.params import ModelParams
from src.egogen.generator import generate_ego_network, scale_network
from src.experiments.config import SpareTimeConfig
from src.utils.seeding import derive_seed

CURVE_FILE = "fig3_spare_time.csv"


def spare_time_curve(
    network: EgoNetwork,
    params: ModelParams,
    gammas: Sequence[float],
    y_budgets: Sequence[float],
) -> pd.DataFrame:
    """Решает задачу распределения для каждой пары (gamma, Y)

    Returns:
        Таблица с колонками gamma, y_budget, y_sum, spare_time_hours
    """
    records = []
    for y_budget in y_budgets:
        for gamma in gammas:
            point = params.replace(gamma=gamma, avatar_budget_y=y_budget)
            allocation = solve_allocation(network, point)
            records.append({
                "gamma": gamma,
                "y_budget": y_budget,
                "y_sum": allocation.y_sum,
                "spare_time_hours": spare_time(allocation, network, point),
            })
    return pd.DataFrame(records, columns=["gamma", "y_budget", "y_sum", "spare_time_hours"])


def run_spare_time(config: SpareTimeConfig, out_dir: Union[str, Path]) -> pd.DataFrame:
    """Строит масштабированную сеть и пишет таблицу кривой свободного времени"""
    seed = derive_seed(config.base_seed, purpose="spare_time", n_alters=config.network_size)
    network = scale_network(
        generate_ego_network(seed, size_override=config.network_size, demand_sigma=0.0),
        config.target_capacity,
    )
    capacity = network.baseline_capacity
    params = ModelParams(beta=config.beta, gamma=config.gammas()[0], z_max=config.z_max)
    curve = spare_time_curve(network, params, config.gammas(), [m * capacity for m in config.y_multipliers])

    path = Path(out_dir) / CURVE_FILE
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        curve.to_csv(path, index=False, lineterminator="\n", encoding="utf-8")
    except OSError as e:
        raise ExperimentError(f"cannot write {path}: {e}") from e
    logger.info(f"Spare-time curve: {len(curve)} points, X~={capacity:.1f}h written to {path}")
    return curve
