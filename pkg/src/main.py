#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
sparetime - распределение и планирование социального времени с аватаром
Генерирует экземпляры эго-сетей, планирует их с аватаром и без него
и запускает переборы параметров

Коды выхода: 0 успех, 1 недопустимость модели, 2 ошибка использования, конфигурации или ввода-вывода
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

# Добавляем корневую директорию в sys.path при запуске как скрипта
root_dir = Path(__file__).parent.parent
if str(root_dir) not in sys.path:
    sys.path.append(str(root_dir))

from loguru import logger

from src.allocator.io import write_allocation_csv
from src.allocator.solver import solve_allocation
from src.core.errors import (
    ExperimentError,
    InfeasibleAllocationError,
    InstanceFormatError,
    InstanceMismatchError,
    ParameterError,
)
from src.core.validation import validate_instance
from src.database.database import ResultStore
from src.egogen.generator import generate_conflict_graph, generate_ego_network, sample_network_sizes
from src.egogen.serialization import read_instance, write_instance
from src.experiments.config import SpareTimeConfig, SweepConfig, preset
from src.experiments.runner import Arm, ExperimentRow, sweep
from src.experiments.spare_time import run_spare_time
from src.experiments.summary import summarize, write_summary
from src.scheduler.evaluation import evaluate
from src.scheduler.heuristic import schedule
from src.scheduler.io import write_cost_summary_csv, write_schedule_csv, write_validation_report
from src.scheduler.validation import validate_schedule
from src.social_requests.generator import generate_skeletons, materialize
from src.social_requests.io import read_skeletons_csv, write_requests_csv, write_skeletons_csv
from src.utils.config import CliConfig, load_config, save_config
from src.utils.logging import setup_logging
from src.utils.seeding import derive_seed

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2

INSTANCE_FILE = "instance.txt"
SKELETONS_FILE = "skeletons.csv"
CONFIG_FILE = "config.used.yaml"
SIZE_SAMPLES = 10_000


def cmd_gen(config: CliConfig, args: argparse.Namespace) -> int:
    """Записывает сеть, ее граф конфликтов и заготовки запросов"""
    out_dir = Path(config.out_dir)
    network = generate_ego_network(
        derive_seed(config.seed, stage="network"),
        size_override=config.network_size,
        demand_sigma=config.demand_sigma,
    )
    conflicts = generate_conflict_graph(derive_seed(config.seed, stage="conflicts"), len(network), config.conflict_density)
    params = config.model_params(config.y_frac * network.baseline_capacity)
    violations = validate_instance(network, conflicts, params)
    if violations:
        for violation in violations:
            logger.error(f"Invalid instance: {violation}")
        return EXIT_USAGE

    skeletons = generate_skeletons(derive_seed(config.seed, stage="skeletons"), network, config.deadline_frac, params)
    write_instance(out_dir / INSTANCE_FILE, network, conflicts)
    write_skeletons_csv(out_dir / SKELETONS_FILE, skeletons)
    save_config(config, out_dir / CONFIG_FILE)
    logger.info(
        f"Instance written to {out_dir}: {len(network)} alters, {len(conflicts.edges)} conflicts, "
        f"{len(skeletons)} requests, X~={network.baseline_capacity:.1f}h"
    )
    return EXIT_OK


def cmd_run(config: CliConfig, args: argparse.Namespace) -> int:
    """Распределяет, планирует, проверяет и оценивает экземпляр для каждой запрошенной ветви"""
    instance_dir = Path(args.instance)
    network, conflicts = read_instance(instance_dir / INSTANCE_FILE)
    skeletons = read_skeletons_csv(instance_dir / SKELETONS_FILE)
    arms = [Arm.AVATAR, Arm.BASELINE] if args.arm == "both" else [Arm(args.arm)]

    exit_code = EXIT_OK
    for arm in arms:
        out_dir = Path(config.out_dir) / arm.value if len(arms) > 1 else Path(config.out_dir)
        y_budget = config.y_frac * network.baseline_capacity if arm is Arm.AVATAR else 0.0
        params = config.model_params(y_budget)
        problems = validate_instance(network, conflicts, params)
        if problems:
            for problem in problems:
                logger.error(f"Invalid instance: {problem}")
            return EXIT_USAGE

        allocation = solve_allocation(network, params)
        requests = materialize(skeletons, allocation, params)
        result = schedule(requests, conflicts, params, allocation)
        violations = validate_schedule(result, requests, conflicts, allocation, params)
        report = evaluate(result, requests, allocation, network, params)

        write_allocation_csv(out_dir / "allocation.csv", allocation)
        write_requests_csv(out_dir / "requests.csv", requests)
        write_schedule_csv(out_dir / "schedule.csv", result, requests, params)
        write_cost_summary_csv(out_dir / "cost_summary.csv", report)
        write_validation_report(out_dir / "validation.txt", violations, result.unscheduled)

        logger.info(
            f"[{arm.value}] cost {report.total_cost} days, spare time {report.spare_time:.2f}h, "
            f"year 1: {report.n_year1}, year 2: {report.n_year2}, unscheduled: {report.n_unscheduled}"
        )
        if result.unscheduled or violations:
            logger.error(f"[{arm.value}] schedule infeasible: {len(result.unscheduled)} unscheduled, {len(violations)} violations")
            exit_code = EXIT_INFEASIBLE
    save_config(config, Path(config.out_dir) / CONFIG_FILE)
    return exit_code


def _sweep_config(config: CliConfig, name: Optional[str]) -> SweepConfig:
    if name is None:
        return config.sweep_config()
    grid = preset(name)
    return grid.model_copy(update={"base_seed": config.seed, "record_runtime": config.record_runtime})


def cmd_sweep(config: CliConfig, args: argparse.Namespace) -> int:
    """Запускает кампанию и пишет файл строк и таблицы для графиков"""
    out_dir = Path(config.out_dir)
    if args.preset == "fig3":
        run_spare_time(SpareTimeConfig(base_seed=config.seed), out_dir)
        save_config(config, out_dir / CONFIG_FILE)
        return EXIT_OK

    grid = _sweep_config(config, args.preset)
    store: Optional[ResultStore] = None
    on_rows: Optional[Callable[[List[ExperimentRow]], None]] = None
    if config.results_db:
        store = ResultStore(config.results_db)
        store.initialize()
        sweep_run_id = store.start_run(grid.preset, grid.base_seed, grid.model_dump_json())

        def on_rows(pair: List[ExperimentRow]) -> None:
            store.add_rows(sweep_run_id, pair)

    try:
        rows = sweep(grid, out_dir, jobs=args.jobs, on_rows=on_rows)
        sizes = sample_network_sizes(derive_seed(grid.base_seed, purpose="network_sizes"), SIZE_SAMPLES)
        tables = summarize(rows, sizes, beta=grid.beta)
        write_summary(tables, out_dir)
    except Exception as e:
        if store is not None:
            store.finish_run(sweep_run_id, success=False, error_message=str(e))
        raise

    if store is not None:
        store.finish_run(sweep_run_id, success=True, findings=len(tables["findings"]))
    save_config(config, out_dir / CONFIG_FILE)
    infeasible = sum(1 for row in rows if not row.feasible)
    logger.info(f"Sweep wrote {len(rows)} rows to {out_dir} ({infeasible} infeasible)")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[CliConfig, argparse.Namespace], int]] = {
    "gen": cmd_gen,
    "run": cmd_run,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sparetime", description="SpareTime - планирование социального времени с аватаром")
    parser.add_argument("--config", type=str, default=None, help="Путь к плоскому YAML файлу конфигурации")
    parser.add_argument("--debug", action="store_true", help="Включить режим отладки")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="Базовое зерно (заменяет значение из конфигурации)")
    common.add_argument("--out", type=str, default=None, help="Каталог результатов (заменяет out_dir)")

    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("gen", parents=[common], help="Сгенерировать файлы экземпляра")

    run = commands.add_parser("run", parents=[common], help="Спланировать экземпляр")
    run.add_argument("--instance", type=str, required=True, help="Каталог, созданный командой gen")
    run.add_argument("--arm", choices=["A", "nonA", "both"], default="A", help="Ветвь с аватаром, без аватара или обе")

    sweep_parser = commands.add_parser("sweep", parents=[common], help="Запустить перебор параметров")
    sweep_parser.add_argument("--preset", choices=["table2", "fig3", "ci"], default=None, help="Именованная сетка")
    sweep_parser.add_argument("--jobs", type=int, default=None, help="Число процессов (по умолчанию все ядра)")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Точка входа командной строки; возвращает код выхода процесса"""
    args = build_parser().parse_args(argv)

    try:
        config = load_config(args.config, overrides={"seed": args.seed, "out_dir": args.out})
    except ParameterError as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_USAGE

    setup_logging("DEBUG" if args.debug else config.log_level, config.log_file)
    logger.debug(f"sparetime {args.command} with seed {config.seed}, output {config.out_dir}")

    try:
        return COMMANDS[args.command](config, args)
    except InfeasibleAllocationError as e:
        logger.error(f"Infeasible allocation: {e}")
        return EXIT_INFEASIBLE
    except (ParameterError, InstanceFormatError, InstanceMismatchError, ExperimentError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        sys.exit(EXIT_USAGE)
