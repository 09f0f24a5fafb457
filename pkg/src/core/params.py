#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Скалярные константы модели и их проверка

Значения по умолчанию: beta = 1.29, c = 0.54, delta = 7/6
(gamma = c * delta ~ 0.63), Z_max = 304 ч, слоты по 8 ч на k = 364 дня.
"""

from typing import Any, Dict, Optional, TYPE_CHECKING

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.errors import ParameterError

if TYPE_CHECKING:
    from src.core.network import EgoNetwork


DEFAULT_BETA = 1.29
DEFAULT_COMPRESSION_C = 0.54
DEFAULT_CUE_DELTA = 7 / 6
DEFAULT_Z_MAX = 304.0
DEFAULT_SLOT_HOURS = 8.0
DEFAULT_HORIZON_K = 364
HOURS_PER_YEAR = 8760.0

GAMMA_TOLERANCE = 1e-12


def derive_gamma(compression_c: float, cue_delta: float) -> float:
    """Эффективность пересказа gamma = c * delta

    Args:
        compression_c: Коэффициент сжатия, в (0, 1]
        cue_delta: Эффективность социальных подсказок, > 0

    Returns:
        Произведение c * delta

    Raises:
        ParameterError: Если один из множителей вне диапазона
    """
    if not 0.0 < compression_c <= 1.0:
        raise ParameterError("compression_c", f"must be in (0, 1], got {compression_c}")
    if not cue_delta > 0.0:
        raise ParameterError("cue_delta", f"must be > 0, got {cue_delta}")
    return compression_c * cue_delta


class ModelParams(BaseModel):
    """Все скалярные константы модели распределения времени (часы, дни)"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    beta: float = Field(DEFAULT_BETA, gt=0)
    compression_c: Optional[float] = None
    cue_delta: Optional[float] = None
    gamma: float = Field(..., gt=0, le=1)
    avatar_budget_y: float = Field(HOURS_PER_YEAR, ge=0)
    z_max: float = Field(DEFAULT_Z_MAX, ge=0)
    slot_hours: float = Field(DEFAULT_SLOT_HOURS, gt=0)
    horizon_k: int = Field(DEFAULT_HORIZON_K, ge=1)
    x_prime: Optional[float] = Field(None, ge=0)
    # Поальтерные значения; решатели пакета принимают только скалярный beta
    beta_overrides: Dict[int, float] = Field(default_factory=dict)

    @model_validator(mode="before")
    @classmethod
    def _resolve_gamma(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        c = data.get("compression_c")
        delta = data.get("cue_delta")
        gamma = data.get("gamma")

        if gamma is None:
            if c is None and delta is None:
                c, delta = DEFAULT_COMPRESSION_C, DEFAULT_CUE_DELTA
                data["compression_c"], data["cue_delta"] = c, delta
            if c is None or delta is None:
                missing = "compression_c" if c is None else "cue_delta"
                raise ParameterError(missing, "both factors are required to derive gamma")
            data["gamma"] = derive_gamma(c, delta)
        elif c is not None and delta is not None:
            derived = derive_gamma(c, delta)
            if abs(derived - gamma) > GAMMA_TOLERANCE:
                raise ParameterError(
                    "gamma", f"{gamma} is inconsistent with compression_c * cue_delta = {derived}"
                )
        return data

    @property
    def inverse_beta(self) -> float:
        return 1.0 / self.beta

    @property
    def avatar_beneficial(self) -> bool:
        """True в режиме gamma <= 1/beta, где делегирование экономит время пользователя"""
        return self.gamma <= self.inverse_beta

    def beta_for(self, alter_id: int) -> float:
        return self.beta_overrides.get(alter_id, self.beta)

    def capacity_for(self, network: "EgoNetwork") -> float:
        """Фактическая емкость общения X~'; None означает базовую X~"""
        if self.x_prime is None:
            return network.baseline_capacity
        return self.x_prime

    def replace(self, **changes: Any) -> "ModelParams":
        """Возвращает проверенную копию с измененными полями"""
        data = self.model_dump()
        if "gamma" in changes and not {"compression_c", "cue_delta"} & changes.keys():
            data["compression_c"] = None
            data["cue_delta"] = None
        elif {"compression_c", "cue_delta"} & changes.keys() and "gamma" not in changes:
            data["gamma"] = None
        data.update(changes)
        return ModelParams(**data)
