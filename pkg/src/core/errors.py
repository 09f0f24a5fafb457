#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Иерархия исключений, общая для всех модулей SpareTime
"""

from typing import Optional


class SpareTimeError(Exception):
    """Базовый класс всех ошибок пакета"""


class ParameterError(SpareTimeError, ValueError):
    """Параметр модели или генератора вне допустимого диапазона

    Наследует ValueError, чтобы валидаторы pydantic превращали ее
    в ValidationError с именем поля.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class InfeasibleAllocationError(SpareTimeError):
    """Задача распределения времени не имеет решения

    Args:
        lower_bound: Минимальная сумма часов аватара, при которой X + Z укладывается в емкость
        cap: Максимальная сумма часов аватара, допустимая бюджетами
    """

    def __init__(self, lower_bound: float, cap: float, reason: str = ""):
        self.lower_bound = lower_bound
        self.cap = cap
        text = f"allocation infeasible: required avatar hours >= {lower_bound:.6g}, cap {cap:.6g}"
        if reason:
            text = f"{text} ({reason})"
        super().__init__(text)


class InstanceMismatchError(SpareTimeError):
    """Наборы альтеров распределения, сети и запросов не совпадают"""


class InstanceTooLargeError(SpareTimeError):
    """Точный оракул получил экземпляр больше допустимого размера"""


class InstanceFormatError(SpareTimeError):
    """Файл экземпляра или CSV не удается разобрать"""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        where = ""
        if path:
            where = f"{path}:{line}: " if line else f"{path}: "
        super().__init__(f"{where}{message}")


class ExperimentError(SpareTimeError):
    """Строки эксперимента не удается свести или сохранить"""
