#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Стабильное получение зерен генераторов

Все случайные величины выводятся из одного пользовательского зерна. Дочерние
зерна получаются из именованных координат ключевым хешем BLAKE2, новая
координата не меняет зерна существующих.
"""

import hashlib
from typing import Any

import numpy as np

SEED_MASK = (1 << 63) - 1


def _encode(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def derive_seed(base_seed: int, **coordinates: Any) -> int:
    """Смешивает базовое зерно с именованными координатами в 63-битное зерно

    Args:
        base_seed: Зерно пользователя
        **coordinates: Именованные координаты (порядок не важен)

    Returns:
        base_seed + hash(coordinates) по модулю 2^63
    """
    payload = ";".join(f"{key}={_encode(coordinates[key])}" for key in sorted(coordinates))
    digest = hashlib.blake2b(payload.encode("utf-8"), digest_size=8, key=b"sparetime").digest()
    return (int(base_seed) + int.from_bytes(digest, "big")) & SEED_MASK


def make_rng(seed: int) -> np.random.Generator:
    """numpy Generator для любого целого зерна, включая отрицательные"""
    return np.random.default_rng(int(seed) & SEED_MASK)
