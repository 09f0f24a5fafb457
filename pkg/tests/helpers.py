from typing import Dict, List, Sequence, Tuple

import numpy as np

from src.allocator.solver import TimeAllocation
from src.core.network import Alter, ConflictGraph, EgoNetwork, Layer
from src.core.params import ModelParams
from src.social_requests.model import MaterializedRequest, Mode


def allocation_for(requests: Sequence[MaterializedRequest], alter_ids: Sequence[int], gamma: float) -> TimeAllocation:
    """Allocation whose per-alter totals match the given requests exactly"""
    x: Dict[int, List[float]] = {v: [] for v in alter_ids}
    y: Dict[int, List[float]] = {v: [] for v in alter_ids}
    for r in requests:
        (x if r.is_physical else y)[r.alter_id].append(r.duration)
    return TimeAllocation(
        alter_ids=tuple(alter_ids),
        x=tuple(float(sum(x[v])) for v in alter_ids),
        y=tuple(float(sum(y[v])) for v in alter_ids),
        gamma=gamma,
    )


def network_of(n: int, demand: float = 10.0) -> EgoNetwork:
    return EgoNetwork(alters=tuple(Alter(id=i, layer=Layer.ACTIVE, annual_demand=demand) for i in range(n)))


def random_tiny_instance(seed: int) -> Tuple[List[MaterializedRequest], ConflictGraph, ModelParams, TimeAllocation]:
    """At most 4 alters, k <= 6 days and 6 requests with half-hour durations"""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5))
    k = int(rng.integers(3, 7))
    m = int(rng.integers(2, 7))
    gamma = 0.5
    requests = []
    for request_id in range(m):
        start = int(rng.integers(1, k + 1))
        end = int(rng.integers(start, k + 1))
        duration = float(rng.integers(2, 13)) / 2.0
        mode = Mode.AVATAR if rng.random() < 0.4 else Mode.PHYSICAL
        requests.append(MaterializedRequest(
            request_id=request_id,
            alter_id=int(rng.integers(0, n)),
            mode=mode,
            presence_hours=duration,
            duration=duration,
            debrief=gamma * duration if mode is Mode.AVATAR else 0.0,
            window_start=start,
            window_end=end,
            skeleton_index=request_id,
        ))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    conflicts = ConflictGraph.from_pairs(n, pairs)
    params = ModelParams(gamma=gamma, horizon_k=k, slot_hours=8.0)
    return requests, conflicts, params, allocation_for(requests, range(n), gamma)
