from typing import Callable, Tuple

import pytest

from src.allocator.solver import TimeAllocation
from src.core.network import Alter, EgoNetwork, Layer
from src.core.params import ModelParams
from src.social_requests.model import MaterializedRequest, Mode
from tests.helpers import allocation_for


@pytest.fixture
def params() -> ModelParams:
    """Default model constants, gamma derived from c * delta"""
    return ModelParams()


@pytest.fixture
def two_alter_network() -> EgoNetwork:
    return EgoNetwork(alters=(
        Alter(id=0, layer=Layer.SUPPORT, annual_demand=40.0),
        Alter(id=1, layer=Layer.SYMPATHY, annual_demand=15.0),
    ))


@pytest.fixture
def make_request() -> Callable[..., MaterializedRequest]:
    """Builds a hand-made request; avatar requests need an explicit debrief"""

    def factory(
        request_id: int,
        alter_id: int,
        window: Tuple[int, int],
        duration: float,
        mode: Mode = Mode.PHYSICAL,
        debrief: float = 0.0,
    ) -> MaterializedRequest:
        return MaterializedRequest(
            request_id=request_id,
            alter_id=alter_id,
            mode=mode,
            presence_hours=duration,
            duration=duration,
            debrief=debrief if mode is Mode.AVATAR else 0.0,
            window_start=window[0],
            window_end=window[1],
            skeleton_index=request_id,
        )

    return factory


@pytest.fixture
def matching_allocation() -> Callable[..., TimeAllocation]:
    return allocation_for
