#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Сводные таблицы для графиков по строкам эксперимента
"""

from pathlib import Path
from typing import Dict, Optional, Sequence, Union

import numpy as np
import pandas as pd
from loguru import logger

from src.core.errors import ExperimentError
from src.core.params import DEFAULT_BETA
from src.experiments.runner import Arm, ExperimentRow, rows_frame

# Нижние границы корзин гистограммы стоимости по альтерам в днях; последняя открыта
PER_ALTER_COST_EDGES = (0, 1, 2, 5, 10, 20, 50, 100, 200, 365, 730)


def pair_rows(rows: Sequence[ExperimentRow]) -> pd.DataFrame:
    """Соединяет две ветви каждого экземпляра по run_id

    Returns:
        Строка на экземпляр с cost_A, cost_nonA и improvement_pct
        (пусто, если стоимость без аватара нулевая)

    Raises:
        ExperimentError: При пустом входе или если у экземпляра не ровно одна строка на ветвь
    """
    if not rows:
        raise ExperimentError("no rows to summarize")

    ordered = sorted(rows, key=lambda r: r.sort_key)
    frame = rows_frame(ordered)
    frame["repetition"] = [r.repetition for r in ordered]

    counts = frame.groupby(["run_id", "arm"]).size().unstack(fill_value=0)
    for arm in (Arm.AVATAR.value, Arm.BASELINE.value):
        if arm not in counts.columns:
            counts[arm] = 0
    broken = counts[(counts[Arm.AVATAR.value] != 1) | (counts[Arm.BASELINE.value] != 1)]
    if not broken.empty:
        names = sorted(broken.index)[:10]
        raise ExperimentError(f"{len(broken)} instances lack a row per arm: {names}")

    keys = ["run_id", "seed", "n_alters", "conflict_density", "deadline_frac", "y_frac", "gamma", "repetition"]
    avatar = frame[frame["arm"] == Arm.AVATAR.value].set_index("run_id")
    baseline = frame[frame["arm"] == Arm.BASELINE.value].set_index("run_id")
    paired = avatar[keys[1:]].copy()
    paired["cost_A"] = avatar["total_cost_days"]
    paired["cost_nonA"] = baseline["total_cost_days"].reindex(paired.index)
    paired["spare_time_A"] = avatar["spare_time_hours"]
    paired["feasible"] = avatar["feasible"] & baseline["feasible"].reindex(paired.index)
    nonzero = paired["cost_nonA"] > 0
    paired["improvement_pct"] = np.where(
        nonzero,
        (paired["cost_nonA"] - paired["cost_A"]) / paired["cost_nonA"].where(nonzero, 1) * 100.0,
        np.nan,
    )
    return paired.reset_index()


def _cost_by(paired: pd.DataFrame, key: str) -> pd.DataFrame:
    grouped = paired.groupby(key, sort=True)
    return pd.DataFrame({
        "cost_A": grouped["cost_A"].mean(),
        "cost_nonA": grouped["cost_nonA"].mean(),
        "improvement_pct": grouped["improvement_pct"].mean(),
        "instances": grouped.size(),
    }).reset_index()


def _size_histogram(network_sizes: Optional[Sequence[int]]) -> pd.DataFrame:
    if network_sizes is None or len(network_sizes) == 0:
        return pd.DataFrame(columns=["size", "count"])
    values, counts = np.unique(np.asarray(network_sizes, dtype=int), return_counts=True)
    p10, p50, p90 = np.percentile(network_sizes, [10, 50, 90])
    logger.info(f"Network sizes: p10={p10:.1f} p50={p50:.1f} p90={p90:.1f} over {len(network_sizes)} draws")
    return pd.DataFrame({"size": values, "count": counts})


def _per_alter_histogram(rows: Sequence[ExperimentRow]) -> pd.DataFrame:
    edges = np.asarray(PER_ALTER_COST_EDGES, dtype=float)
    highs = np.append(edges[1:], np.inf)
    records = []
    for arm in (Arm.AVATAR.value, Arm.BASELINE.value):
        costs = np.concatenate([
            np.asarray(r.per_alter_cost, dtype=float) for r in rows if r.arm == arm and r.per_alter_cost
        ] or [np.empty(0)])
        bins = np.searchsorted(edges, costs, side="right") - 1
        counts = np.bincount(bins, minlength=len(edges)) if costs.size else np.zeros(len(edges), dtype=int)
        for low, high, count in zip(edges, highs, counts):
            records.append({"arm": arm, "cost_low": low, "cost_high": high, "alters": int(count)})
    return pd.DataFrame(records, columns=["arm", "cost_low", "cost_high", "alters"])


def summarize(
    rows: Sequence[ExperimentRow],
    network_sizes: Optional[Sequence[int]] = None,
    beta: float = DEFAULT_BETA,
) -> Dict[str, pd.DataFrame]:
    """Сводит строки эксперимента в таблицы для графиков

    Args:
        rows: Строки завершенного эксперимента, обе ветви каждого экземпляра
        network_sizes: Выборка размеров сети для гистограммы (необязательно)
        beta: Коэффициент пересчета присутствия, с которым шел эксперимент

    Returns:
        Именованные таблицы: fig7_sizes, fig8_density, fig9_per_alter,
        fig10_deadline, fig10_y, fig10_gamma, findings

    Raises:
        ExperimentError: При пустом входе или строках без пары
    """
    paired = pair_rows(rows)

    density = paired.groupby(["n_alters", "conflict_density"], sort=True)
    fig8 = pd.DataFrame({
        "cost_A": density["cost_A"].mean(),
        "cost_nonA": density["cost_nonA"].mean(),
        "improvement_pct": density["improvement_pct"].mean(),
        "instances": density.size(),
    }).reset_index()

    findings = paired[
        (paired["gamma"] < 1.0 / beta) & paired["feasible"] & (paired["cost_A"] > paired["cost_nonA"])
    ][["run_id", "seed", "gamma", "y_frac", "cost_A", "cost_nonA"]].reset_index(drop=True)
    if not findings.empty:
        logger.warning(f"{len(findings)} instances where the avatar arm costs more with gamma < 1/beta")

    return {
        "fig7_sizes": _size_histogram(network_sizes),
        "fig8_density": fig8,
        "fig9_per_alter": _per_alter_histogram(sorted(rows, key=lambda r: r.sort_key)),
        "fig10_deadline": _cost_by(paired, "deadline_frac"),
        "fig10_y": _cost_by(paired, "y_frac"),
        "fig10_gamma": _cost_by(paired, "gamma"),
        "findings": findings,
    }


def write_summary(tables: Dict[str, pd.DataFrame], out_dir: Union[str, Path]) -> None:
    """Пишет каждую таблицу в <name>.csv

    Raises:
        ExperimentError: Если файл не удается записать
    """
    target = Path(out_dir)
    for name, table in tables.items():
        path = target / f"{name}.csv"
        try:
            target.mkdir(parents=True, exist_ok=True)
            table.to_csv(path, index=False, lineterminator="\n", encoding="utf-8")
        except OSError as e:
            raise ExperimentError(f"cannot write {path}: {e}") from e
    logger.info(f"Summary tables written to {target}")
