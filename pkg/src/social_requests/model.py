#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Типы значений для социальных запросов
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple


class Mode(str, Enum):
    """Режим обслуживания запроса"""

    PHYSICAL = "physical"
    AVATAR = "avatar"


@dataclass(frozen=True)
class RequestSkeleton:
    """j-й запрос альтера, размер в часах присутствия пользователя

    Окно [window_start, window_end] задается номерами дней года, начиная с 1.
    """

    alter_id: int
    index: int
    presence_hours: float
    window_start: int
    window_end: int

    @property
    def window(self) -> Tuple[int, int]:
        return self.window_start, self.window_end


@dataclass(frozen=True)
class MaterializedRequest:
    """Единица планирования с зафиксированным режимом

    Очный запрос занимает `duration` часов пользователя. Запрос аватара занимает
    `duration` = beta * presence часов аватара и пересказ в тот же день
    длиной gamma * duration часов пользователя.
    """

    request_id: int
    alter_id: int
    mode: Mode
    presence_hours: float
    duration: float
    debrief: float
    window_start: int
    window_end: int
    skeleton_index: int

    @property
    def window(self) -> Tuple[int, int]:
        return self.window_start, self.window_end

    @property
    def is_physical(self) -> bool:
        return self.mode is Mode.PHYSICAL

    @property
    def user_hours(self) -> float:
        """Время пользователя в день обслуживания"""
        return self.duration if self.is_physical else self.debrief

    @property
    def avatar_hours(self) -> float:
        return 0.0 if self.is_physical else self.duration
