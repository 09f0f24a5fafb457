#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Конфигурация инструментов командной строки

Значения объединяются в порядке возрастания приоритета: значения по умолчанию,
плоский YAML файл, переменные окружения SPARETIME_<KEY> (учитывается .env файл),
флаги командной строки.
"""

import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

import yaml
from dotenv import find_dotenv, load_dotenv
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.core.errors import ParameterError
from src.core.params import (
    DEFAULT_BETA,
    DEFAULT_HORIZON_K,
    DEFAULT_SLOT_HOURS,
    DEFAULT_Z_MAX,
    HOURS_PER_YEAR,
    ModelParams,
)
from src.egogen.generator import DEFAULT_DEMAND_SIGMA, MIN_NETWORK_SIZE
from src.egogen.layers import DEFAULT_SIZE_MODEL
from src.experiments.config import SweepConfig

ENV_PREFIX = "SPARETIME_"
LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class CliConfig(BaseModel):
    """Плоский набор ключей, общий для всех команд"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    seed: int = 0
    beta: float = Field(DEFAULT_BETA, gt=0)
    gamma: Optional[float] = Field(None, gt=0, le=1)
    c: Optional[float] = Field(None, gt=0, le=1)
    delta: Optional[float] = Field(None, gt=0)
    z_max_hours: float = Field(DEFAULT_Z_MAX, ge=0)
    slot_hours: float = Field(DEFAULT_SLOT_HOURS, gt=0)
    k_days: int = Field(DEFAULT_HORIZON_K, ge=1)
    y_frac: float = Field(1.0, ge=0)
    conflict_density: float = Field(0.2, ge=0, le=1)
    deadline_frac: float = Field(0.2, gt=0, le=1)
    network_size: Optional[int] = Field(None, ge=MIN_NETWORK_SIZE)
    repetitions: int = Field(10, ge=1)
    out_dir: str = "results"
    x_prime_hours: Optional[float] = Field(None, ge=0)
    demand_sigma: float = Field(DEFAULT_DEMAND_SIGMA, ge=0)
    log_level: str = "INFO"
    log_file: Optional[str] = None
    results_db: Optional[str] = None
    record_runtime: bool = False

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ParameterError("log_level", f"must be one of {', '.join(LOG_LEVELS)}, got {value!r}")
        return level

    @model_validator(mode="after")
    def _check_gamma(self) -> "CliConfig":
        self.model_params()
        return self

    @property
    def resolved_gamma(self) -> float:
        return self.model_params().gamma

    def model_params(self, avatar_budget_y: float = HOURS_PER_YEAR) -> ModelParams:
        """Параметры модели с gamma, заданной явно или через (c, delta)

        Raises:
            ParameterError: Если gamma не совпадает с c * delta или задан только один множитель
        """
        try:
            return ModelParams(
                beta=self.beta,
                gamma=self.gamma,
                compression_c=self.c,
                cue_delta=self.delta,
                avatar_budget_y=avatar_budget_y,
                z_max=self.z_max_hours,
                slot_hours=self.slot_hours,
                horizon_k=self.k_days,
                x_prime=self.x_prime_hours,
            )
        except ValidationError as e:
            raise _as_parameter_error(e) from None

    def sweep_config(self) -> SweepConfig:
        """Сетка из одной ячейки, построенная по плоским ключам"""
        return SweepConfig(
            base_seed=self.seed,
            repetitions=self.repetitions,
            network_sizes=(self.network_size or int(DEFAULT_SIZE_MODEL.median),),
            conflict_densities=(self.conflict_density,),
            deadline_fracs=(self.deadline_frac,),
            y_fracs=(self.y_frac,),
            gammas=(self.resolved_gamma,),
            beta=self.beta,
            z_max=self.z_max_hours,
            slot_hours=self.slot_hours,
            horizon_k=self.k_days,
            demand_sigma=self.demand_sigma,
            record_runtime=self.record_runtime,
        )


def _as_parameter_error(error: ValidationError) -> ParameterError:
    first = error.errors()[0]
    cause = first.get("ctx", {}).get("error")
    if isinstance(cause, ParameterError):
        return cause
    field = ".".join(str(part) for part in first.get("loc", ())) or "config"
    message = first.get("msg", str(error))
    if len(error.errors()) > 1:
        message += f" (and {len(error.errors()) - 1} more)"
    return ParameterError(field, message)


def _load_from_file(config_path: Union[str, Path]) -> Dict[str, Any]:
    config_file = Path(config_path)
    if not config_file.exists():
        raise ParameterError("config", f"file not found: {config_file}")
    try:
        with open(config_file, "r", encoding="utf-8") as file:
            data = yaml.safe_load(file) or {}
    except yaml.YAMLError as e:
        raise ParameterError("config", f"cannot parse {config_file}: {e}") from e
    if not isinstance(data, dict):
        raise ParameterError("config", f"{config_file} must hold a flat key: value mapping")
    nested = sorted(key for key, value in data.items() if isinstance(value, dict))
    if nested:
        raise ParameterError(str(nested[0]), "nested sections are not supported, keys are flat")
    logger.info(f"Configuration loaded from {config_file}")
    return data


def _load_from_env() -> Dict[str, Any]:
    """Читает переменные SPARETIME_<KEY> для всех известных ключей"""
    config = {}
    for key in CliConfig.model_fields:
        value = os.environ.get(f"{ENV_PREFIX}{key.upper()}")
        if value is not None:
            config[key] = value
    return config


def _merge_configs(base_config: Dict[str, Any], override_config: Mapping[str, Any]) -> None:
    """Заменяет ключи на месте; значения None не меняют базовую конфигурацию"""
    for key, value in override_config.items():
        if value is not None:
            base_config[key] = value


def load_config(
    config_path: Optional[Union[str, Path]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> CliConfig:
    """Собирает итоговую конфигурацию

    Args:
        config_path: Плоский YAML файл (необязательно)
        overrides: Значения флагов командной строки; None игнорируются

    Returns:
        Проверенная конфигурация

    Raises:
        ParameterError: С именем ключа при неизвестном ключе, неверном значении
            или нечитаемом файле
    """
    # Загружаем переменные окружения из .env файла в рабочем каталоге
    load_dotenv(find_dotenv(usecwd=True))
    config: Dict[str, Any] = {}
    if config_path:
        _merge_configs(config, _load_from_file(config_path))

    # Переменные окружения имеют приоритет над файлом
    env_config = _load_from_env()
    if env_config:
        _merge_configs(config, env_config)
        logger.info(f"Configuration overridden from environment: {sorted(env_config)}")
    if overrides:
        _merge_configs(config, overrides)

    try:
        return CliConfig(**config)
    except ValidationError as e:
        raise _as_parameter_error(e) from None


def save_config(config: CliConfig, config_path: Union[str, Path]) -> None:
    """Сохраняет итоговую конфигурацию в плоский YAML файл

    Raises:
        OSError: Если файл не удается записать
    """
    config_file = Path(config_path)
    config_file.parent.mkdir(parents=True, exist_ok=True)
    with open(config_file, "w", encoding="utf-8") as file:
        yaml.safe_dump(config.model_dump(), file, default_flow_style=False, sort_keys=True)
    logger.debug(f"Configuration saved to {config_file}")
