#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Генерация заготовок запросов и назначение режима обслуживания
"""

import math
from collections import defaultdict
from typing import Dict, List, Sequence

from loguru import logger

from src.allocator.solver import TimeAllocation
from src.core.errors import InstanceMismatchError, ParameterError
from src.core.network import EgoNetwork
from src.core.params import ModelParams
from src.social_requests.model import MaterializedRequest, Mode, RequestSkeleton
from src.utils.seeding import make_rng

EPSILON = 1e-9


def unit_cap(params: ModelParams) -> float:
    """Наибольший размер запроса, помещающийся в один день в обоих режимах"""
    slot = params.slot_hours
    return min(slot, slot / params.beta, slot / (params.gamma * params.beta))


def generate_skeletons(
    seed: int,
    network: EgoNetwork,
    deadline_frac: float,
    params: ModelParams,
) -> List[RequestSkeleton]:
    """Нарезает годовую потребность каждого альтера на запросы с окнами сроков

    Размеры равномерны в (0, unit_cap]; последний запрос альтера забирает
    остаток, поэтому сумма размеров равна потребности. Начало окна равномерно
    по году, длина окна равномерна в [1, floor(deadline_frac * k)].

    Raises:
        ParameterError: Если deadline_frac не в (0, 1]
    """
    if not 0.0 < deadline_frac <= 1.0:
        raise ParameterError("deadline_frac", f"must be in (0, 1], got {deadline_frac}")

    rng = make_rng(seed)
    cap = unit_cap(params)
    k = params.horizon_k
    max_length = max(1, int(math.floor(deadline_frac * k)))

    skeletons: List[RequestSkeleton] = []
    for alter in network.alters:
        consumed = 0.0
        index = 0
        while True:
            size = cap - rng.uniform(0.0, cap)
            start = int(rng.integers(1, k + 1))
            length = int(rng.integers(1, max_length + 1))
            last = consumed + size >= alter.annual_demand
            if last:
                size = alter.annual_demand - consumed
            skeletons.append(RequestSkeleton(
                alter_id=alter.id,
                index=index,
                presence_hours=size,
                window_start=start,
                window_end=min(start + length, k),
            ))
            if last:
                break
            consumed += size
            index += 1

    logger.debug(f"Generated {len(skeletons)} request skeletons for {len(network)} alters (seed={seed})")
    return skeletons


def materialize(
    skeletons: Sequence[RequestSkeleton],
    allocation: TimeAllocation,
    params: ModelParams,
) -> List[MaterializedRequest]:
    """Помечает запросы очными, пока не израсходованы x_v часов, остальные отдает аватару

    Запрос на границе делится на очную часть и часть аватара с общим окном.
    Часть аватара длится beta * presence часов, пересказ занимает
    gamma * duration.

    Raises:
        InstanceMismatchError: Если наборы альтеров заготовок и распределения различаются
    """
    by_alter: Dict[int, List[RequestSkeleton]] = defaultdict(list)
    for skeleton in skeletons:
        by_alter[skeleton.alter_id].append(skeleton)
    if set(by_alter) != set(allocation.alter_ids):
        missing = sorted(set(allocation.alter_ids) ^ set(by_alter))
        raise InstanceMismatchError(f"request and allocation alter sets differ: {missing[:10]}")

    beta, gamma = params.beta, params.gamma
    requests: List[MaterializedRequest] = []

    def emit(skeleton: RequestSkeleton, mode: Mode, presence: float) -> None:
        duration = presence if mode is Mode.PHYSICAL else beta * presence
        requests.append(MaterializedRequest(
            request_id=len(requests),
            alter_id=skeleton.alter_id,
            mode=mode,
            presence_hours=presence,
            duration=duration,
            debrief=0.0 if mode is Mode.PHYSICAL else gamma * duration,
            window_start=skeleton.window_start,
            window_end=skeleton.window_end,
            skeleton_index=skeleton.index,
        ))

    for alter_id, x_v in zip(allocation.alter_ids, allocation.x):
        physical_left = x_v
        for skeleton in sorted(by_alter[alter_id], key=lambda s: s.index):
            presence = skeleton.presence_hours
            if physical_left >= presence - EPSILON:
                emit(skeleton, Mode.PHYSICAL, presence)
                physical_left -= presence
            elif physical_left > EPSILON:
                emit(skeleton, Mode.PHYSICAL, physical_left)
                emit(skeleton, Mode.AVATAR, presence - physical_left)
                physical_left = 0.0
            else:
                emit(skeleton, Mode.AVATAR, presence)

    return requests
