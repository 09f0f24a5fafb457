#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Парные запуски с аватаром и без него по сетке параметров
"""

import csv
import os
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Iterable, List, Optional, Tuple, Union

import pandas as pd
from loguru import logger

from src.allocator.solver import solve_allocation
from src.core.errors import ExperimentError, InfeasibleAllocationError
from src.core.network import ConflictGraph, EgoNetwork
from src.core.params import ModelParams
from src.egogen.generator import generate_conflict_graph, generate_ego_network
from src.experiments.config import Cell, SweepConfig
from src.scheduler.evaluation import evaluate
from src.scheduler.heuristic import schedule
from src.social_requests.generator import generate_skeletons, materialize
from src.social_requests.model import RequestSkeleton
from src.utils.seeding import derive_seed

ROW_FIELDS = (
    "run_id",
    "seed",
    "n_alters",
    "conflict_density",
    "deadline_frac",
    "y_frac",
    "gamma",
    "arm",
    "total_cost_days",
    "mean_cost_per_alter",
    "spare_time_hours",
    "n_requests",
    "n_year1",
    "n_year2",
    "n_unscheduled",
    "feasible",
    "runtime_ms",
)
PARTIAL_ROWS_FILE = "rows.partial.csv"
ROWS_FILE = "rows.csv"


class Arm(str, Enum):
    AVATAR = "A"
    BASELINE = "nonA"


@dataclass(frozen=True)
class ExperimentRow:
    """Одна ветвь одного экземпляра; повтор и стоимости по альтерам хранятся только в памяти"""

    run_id: str
    seed: int
    n_alters: int
    conflict_density: float
    deadline_frac: float
    y_frac: float
    gamma: float
    arm: str
    total_cost_days: int
    mean_cost_per_alter: float
    spare_time_hours: float
    n_requests: int
    n_year1: int
    n_year2: int
    n_unscheduled: int
    feasible: bool
    runtime_ms: float
    repetition: int = 0
    per_alter_cost: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def sort_key(self) -> tuple:
        return (
            self.n_alters, self.conflict_density, self.deadline_frac,
            self.y_frac, self.gamma, self.repetition, self.arm,
        )

    def as_record(self) -> dict:
        data = asdict(self)
        return {name: data[name] for name in ROW_FIELDS}


@dataclass(frozen=True)
class InstanceSeeds:
    instance: int
    network: int
    conflicts: int
    skeletons: int


def instance_seeds(base_seed: int, cell: Cell, repetition: int) -> InstanceSeeds:
    """Зерна зависят только от именованных координат экземпляра, но не от gamma и y_frac"""
    return InstanceSeeds(
        instance=derive_seed(
            base_seed, n_alters=cell.n_alters, conflict_density=cell.conflict_density,
            deadline_frac=cell.deadline_frac, repetition=repetition,
        ),
        network=derive_seed(base_seed, n_alters=cell.n_alters, repetition=repetition),
        conflicts=derive_seed(
            base_seed, n_alters=cell.n_alters, repetition=repetition, conflict_density=cell.conflict_density,
        ),
        skeletons=derive_seed(
            base_seed, n_alters=cell.n_alters, repetition=repetition, deadline_frac=cell.deadline_frac,
        ),
    )


def run_id_for(cell: Cell, repetition: int) -> str:
    return (
        f"n{cell.n_alters}-d{cell.conflict_density:g}-f{cell.deadline_frac:g}"
        f"-y{cell.y_frac:g}-g{cell.gamma:g}-r{repetition}"
    )


def _repetition_of(run_id: str) -> int:
    try:
        return int(run_id.rsplit("-r", 1)[1])
    except (IndexError, ValueError):
        return 0


def _run_arm(
    arm: Arm,
    cell: Cell,
    repetition: int,
    seeds: InstanceSeeds,
    network: EgoNetwork,
    conflicts: ConflictGraph,
    skeletons: List[RequestSkeleton],
    params: ModelParams,
    record_runtime: bool,
) -> ExperimentRow:
    started = time.perf_counter()
    common = dict(
        run_id=run_id_for(cell, repetition),
        seed=seeds.instance,
        n_alters=cell.n_alters,
        conflict_density=cell.conflict_density,
        deadline_frac=cell.deadline_frac,
        y_frac=cell.y_frac,
        gamma=cell.gamma,
        arm=arm.value,
        repetition=repetition,
    )
    try:
        allocation = solve_allocation(network, params)
    except InfeasibleAllocationError as e:
        logger.warning(f"{common['run_id']} [{arm.value}]: {e}")
        return ExperimentRow(
            **common,
            total_cost_days=0, mean_cost_per_alter=0.0, spare_time_hours=0.0,
            n_requests=0, n_year1=0, n_year2=0, n_unscheduled=0,
            feasible=False, runtime_ms=0.0,
        )

    requests = materialize(skeletons, allocation, params)
    result = schedule(requests, conflicts, params, allocation)
    report = evaluate(result, requests, allocation, network, params)
    elapsed = (time.perf_counter() - started) * 1000.0 if record_runtime else 0.0
    return ExperimentRow(
        **common,
        total_cost_days=report.total_cost,
        mean_cost_per_alter=report.mean_cost_per_alter,
        spare_time_hours=report.spare_time,
        n_requests=len(requests),
        n_year1=report.n_year1,
        n_year2=report.n_year2,
        n_unscheduled=report.n_unscheduled,
        feasible=report.n_unscheduled == 0,
        runtime_ms=elapsed,
        per_alter_cost=report.per_alter_cost,
    )


def run_cell(cell: Cell, repetition: int, config: SweepConfig) -> Tuple[ExperimentRow, ExperimentRow]:
    """Строит один экземпляр и запускает на нем обе ветви

    Ветвь с аватаром получает бюджет y_frac * X~, ветвь без аватара нулевой.

    Returns:
        (строка с аватаром, строка без аватара)
    """
    seeds = instance_seeds(config.base_seed, cell, repetition)
    network = generate_ego_network(seeds.network, size_override=cell.n_alters, demand_sigma=config.demand_sigma)
    conflicts = generate_conflict_graph(seeds.conflicts, cell.n_alters, cell.conflict_density)
    avatar_params = config.model_params(cell.gamma, cell.y_frac * network.baseline_capacity)
    skeletons = generate_skeletons(seeds.skeletons, network, cell.deadline_frac, avatar_params)

    rows = tuple(
        _run_arm(arm, cell, repetition, seeds, network, conflicts, skeletons, params, config.record_runtime)
        for arm, params in (
            (Arm.AVATAR, avatar_params),
            (Arm.BASELINE, avatar_params.replace(avatar_budget_y=0.0)),
        )
    )
    return rows[0], rows[1]


def is_finding(avatar_row: ExperimentRow, baseline_row: ExperimentRow, beta: float) -> bool:
    """Ветвь с аватаром дороже, хотя gamma < 1/beta"""
    return (
        avatar_row.gamma < 1.0 / beta
        and avatar_row.feasible
        and baseline_row.feasible
        and avatar_row.total_cost_days > baseline_row.total_cost_days
    )


def _run_task(task: Tuple[Cell, int, SweepConfig]) -> Tuple[ExperimentRow, ExperimentRow]:
    cell, repetition, config = task
    return run_cell(cell, repetition, config)


def sweep(
    config: SweepConfig,
    out_dir: Union[str, Path],
    jobs: Optional[int] = None,
    on_rows: Optional[Callable[[List[ExperimentRow]], None]] = None,
) -> List[ExperimentRow]:
    """Запускает все ячейки и повторы сетки

    Строки пишутся в rows.partial.csv по мере готовности пар и передаются
    в on_rows; итоговый rows.csv отсортирован по координатам ячейки,
    повтору и ветви.

    Args:
        config: Сетка параметров
        out_dir: Каталог результатов
        jobs: Число процессов; None использует все доступные ядра
        on_rows: Обработчик каждой готовой пары

    Returns:
        Строки в отсортированном порядке

    Raises:
        ExperimentError: Если файл результатов не удается записать
    """
    target = Path(out_dir)
    tasks = [(cell, rep, config) for cell in config.cells() for rep in range(config.repetitions)]
    workers = jobs if jobs is not None else (os.cpu_count() or 1)
    logger.info(f"Sweep '{config.preset}': {len(tasks)} instances, {config.n_rows} rows, {workers} workers")

    rows: List[ExperimentRow] = []
    findings = 0
    partial_path = target / PARTIAL_ROWS_FILE
    try:
        target.mkdir(parents=True, exist_ok=True)
        with open(partial_path, "w", encoding="utf-8", newline="") as partial:
            writer = csv.DictWriter(partial, fieldnames=ROW_FIELDS, lineterminator="\n")
            writer.writeheader()

            def collect(pair: Tuple[ExperimentRow, ExperimentRow]) -> None:
                nonlocal findings
                for row in pair:
                    writer.writerow(row.as_record())
                partial.flush()
                rows.extend(pair)
                if is_finding(pair[0], pair[1], config.beta):
                    findings += 1
                    logger.warning(
                        f"Finding {pair[0].run_id}: avatar arm costs {pair[0].total_cost_days} days, "
                        f"non-avatar {pair[1].total_cost_days} days at gamma={pair[0].gamma}"
                    )
                if on_rows is not None:
                    on_rows(list(pair))
                done = len(rows) // 2
                if done % 50 == 0 or done == len(tasks):
                    logger.info(f"Progress: {done}/{len(tasks)} instances")

            if workers <= 1:
                for task in tasks:
                    collect(_run_task(task))
            else:
                with ProcessPoolExecutor(max_workers=workers) as executor:
                    futures = [executor.submit(_run_task, task) for task in tasks]
                    for future in as_completed(futures):
                        collect(future.result())
    except OSError as e:
        raise ExperimentError(f"cannot write sweep rows to {partial_path}: {e}") from e

    rows.sort(key=lambda r: r.sort_key)
    write_rows_csv(target / ROWS_FILE, rows)
    partial_path.unlink(missing_ok=True)
    logger.info(f"Sweep finished: {len(rows)} rows, {findings} findings")
    return rows


def rows_frame(rows: Iterable[ExperimentRow]) -> pd.DataFrame:
    return pd.DataFrame([row.as_record() for row in rows], columns=list(ROW_FIELDS))


def write_rows_csv(path: Union[str, Path], rows: Iterable[ExperimentRow]) -> None:
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        rows_frame(rows).to_csv(target, index=False, lineterminator="\n", encoding="utf-8")
    except OSError as e:
        raise ExperimentError(f"cannot write {target}: {e}") from e


def read_rows_csv(path: Union[str, Path]) -> List[ExperimentRow]:
    source = Path(path)
    try:
        frame = pd.read_csv(source)
    except (OSError, pd.errors.ParserError) as e:
        raise ExperimentError(f"cannot read {source}: {e}") from e
    missing = [name for name in ROW_FIELDS if name not in frame.columns]
    if missing:
        raise ExperimentError(f"{source}: missing columns {missing}")

    rows = []
    for record in frame.to_dict(orient="records"):
        rows.append(ExperimentRow(
            run_id=str(record["run_id"]),
            seed=int(record["seed"]),
            n_alters=int(record["n_alters"]),
            conflict_density=float(record["conflict_density"]),
            deadline_frac=float(record["deadline_frac"]),
            y_frac=float(record["y_frac"]),
            gamma=float(record["gamma"]),
            arm=str(record["arm"]),
            total_cost_days=int(record["total_cost_days"]),
            mean_cost_per_alter=float(record["mean_cost_per_alter"]),
            spare_time_hours=float(record["spare_time_hours"]),
            n_requests=int(record["n_requests"]),
            n_year1=int(record["n_year1"]),
            n_year2=int(record["n_year2"]),
            n_unscheduled=int(record["n_unscheduled"]),
            feasible=str(record["feasible"]).lower() == "true",
            runtime_ms=float(record["runtime_ms"]),
            repetition=_repetition_of(str(record["run_id"])),
        ))
    return rows
