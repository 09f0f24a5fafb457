#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Сетки параметров и именованные пресеты
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from src.core.errors import ParameterError
from src.core.params import DEFAULT_BETA, DEFAULT_HORIZON_K, DEFAULT_SLOT_HOURS, DEFAULT_Z_MAX, ModelParams
from src.egogen.generator import DEFAULT_DEMAND_SIGMA, MIN_NETWORK_SIZE


@dataclass(frozen=True, order=True)
class Cell:
    """Одна точка сетки параметров"""

    n_alters: int
    conflict_density: float
    deadline_frac: float
    y_frac: float
    gamma: float


class SweepConfig(BaseModel):
    """Декартова сетка параметров; значения по умолчанию дают полную кампанию"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    base_seed: int = 0
    repetitions: int = Field(10, ge=1)
    network_sizes: Tuple[int, ...] = (68, 126, 170)
    conflict_densities: Tuple[float, ...] = (0.0, 0.2, 0.4, 0.6, 0.8)
    deadline_fracs: Tuple[float, ...] = (0.1, 0.2, 0.3, 0.4)
    y_fracs: Tuple[float, ...] = (0.25, 0.5, 0.75, 1.0)
    gammas: Tuple[float, ...] = (0.2, 0.4, 0.6, 0.8)
    beta: float = Field(DEFAULT_BETA, gt=0)
    z_max: float = Field(DEFAULT_Z_MAX, ge=0)
    slot_hours: float = Field(DEFAULT_SLOT_HOURS, gt=0)
    horizon_k: int = Field(DEFAULT_HORIZON_K, ge=1)
    demand_sigma: float = Field(DEFAULT_DEMAND_SIGMA, ge=0)
    record_runtime: bool = False
    preset: str = "custom"

    @field_validator("network_sizes", "conflict_densities", "deadline_fracs", "y_fracs", "gammas")
    @classmethod
    def _non_empty(cls, value: Tuple, info: ValidationInfo) -> Tuple:
        if not value:
            raise ParameterError(info.field_name, "grid must not be empty")
        return value

    @field_validator("network_sizes")
    @classmethod
    def _sizes(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        for n in value:
            if n < MIN_NETWORK_SIZE:
                raise ParameterError("network_sizes", f"every size must be >= {MIN_NETWORK_SIZE}, got {n}")
        return value

    @field_validator("conflict_densities")
    @classmethod
    def _densities(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        for density in value:
            if not 0.0 <= density <= 1.0:
                raise ParameterError("conflict_densities", f"must be in [0, 1], got {density}")
        return value

    @field_validator("deadline_fracs")
    @classmethod
    def _deadlines(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        for frac in value:
            if not 0.0 < frac <= 1.0:
                raise ParameterError("deadline_fracs", f"must be in (0, 1], got {frac}")
        return value

    @field_validator("y_fracs")
    @classmethod
    def _y_fracs(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        for frac in value:
            if frac < 0:
                raise ParameterError("y_fracs", f"must be >= 0, got {frac}")
        return value

    @field_validator("gammas")
    @classmethod
    def _gammas(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        for gamma in value:
            if not 0.0 < gamma <= 1.0:
                raise ParameterError("gammas", f"must be in (0, 1], got {gamma}")
        return value

    def cells(self) -> Iterator[Cell]:
        for n, density, deadline, y_frac, gamma in product(
            self.network_sizes, self.conflict_densities, self.deadline_fracs, self.y_fracs, self.gammas
        ):
            yield Cell(n, density, deadline, y_frac, gamma)

    @property
    def n_cells(self) -> int:
        return (
            len(self.network_sizes) * len(self.conflict_densities) * len(self.deadline_fracs)
            * len(self.y_fracs) * len(self.gammas)
        )

    @property
    def n_rows(self) -> int:
        """Две ветви на ячейку и повтор"""
        return 2 * self.n_cells * self.repetitions

    def model_params(self, gamma: float, avatar_budget_y: float) -> ModelParams:
        return ModelParams(
            beta=self.beta,
            gamma=gamma,
            avatar_budget_y=avatar_budget_y,
            z_max=self.z_max,
            slot_hours=self.slot_hours,
            horizon_k=self.horizon_k,
        )


class SpareTimeConfig(BaseModel):
    """Перебор gamma только для распределителя на одной сети с фиксированной базовой емкостью"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    base_seed: int = 0
    network_size: int = Field(117, ge=MIN_NETWORK_SIZE)
    target_capacity: float = Field(1288.0, gt=0)
    z_max: float = Field(300.0, ge=0)
    beta: float = Field(DEFAULT_BETA, gt=0)
    gamma_start: float = Field(0.01, gt=0)
    gamma_step: float = Field(0.01, gt=0)
    y_multipliers: Tuple[float, ...] = (0.5, 1.0, 1.5)
    preset: str = "fig3"

    def gammas(self) -> Tuple[float, ...]:
        """Равномерные значения gamma ниже 1/beta, последним идет сам 1/beta"""
        inverse = 1.0 / self.beta
        grid = np.arange(self.gamma_start, inverse, self.gamma_step)
        return tuple(float(g) for g in grid if g < inverse) + (inverse,)


PRESETS: Dict[str, BaseModel] = {
    "table2": SweepConfig(preset="table2"),
    "ci": SweepConfig(
        preset="ci",
        repetitions=2,
        network_sizes=(68,),
        conflict_densities=(0.0, 0.4, 0.8),
        deadline_fracs=(0.2,),
        y_fracs=(0.5, 1.0),
        gammas=(0.63, 0.8),
    ),
    "fig3": SpareTimeConfig(),
}


def preset(name: str) -> BaseModel:
    """Ищет пресет по имени

    Raises:
        ParameterError: При неизвестном имени
    """
    try:
        return PRESETS[name]
    except KeyError:
        raise ParameterError("preset", f"unknown preset {name!r}, expected one of {sorted(PRESETS)}") from None
