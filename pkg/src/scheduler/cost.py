#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Социальная стоимость обслуживания запроса в заданный эффективный день

Эффективные дни идут подряд через два года, 1..2k. Обслуживание в первом году
до окна штрафуется как перенос на следующий год (+365), внутри окна бесплатно,
после окна стоит число дней опоздания. День i второго года стоит как день i
первого года плюс 365.
"""

from typing import Tuple

from src.core.errors import ParameterError
from src.core.params import DEFAULT_HORIZON_K

YEAR_OFFSET = 365


def day_cost(window_start: int, window_end: int, day: int, horizon_k: int) -> int:
    """social_cost без проверок для горячих циклов"""
    if day > horizon_k:
        return day - horizon_k + YEAR_OFFSET - window_end
    if day < window_start:
        return day + YEAR_OFFSET - window_end
    if day <= window_end:
        return 0
    return day - window_end


def social_cost(window: Tuple[int, int], effective_day: int, horizon_k: int = DEFAULT_HORIZON_K) -> int:
    """Штраф за опоздание в днях

    Args:
        window: (d', d'') с 1 <= d' <= d'' <= k
        effective_day: День обслуживания в 1..2k
        horizon_k: Число дней в году

    Returns:
        Неотрицательная стоимость в днях

    Raises:
        ParameterError: Если окно или день вне диапазона
    """
    start, end = window
    if not 1 <= start <= end <= horizon_k:
        raise ParameterError("window", f"need 1 <= d' <= d'' <= {horizon_k}, got ({start}, {end})")
    if not 1 <= effective_day <= 2 * horizon_k:
        raise ParameterError("effective_day", f"must be in 1..{2 * horizon_k}, got {effective_day}")
    return day_cost(start, end, effective_day, horizon_k)
