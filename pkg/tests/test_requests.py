import math
from collections import defaultdict

import pytest

from src.allocator.solver import TimeAllocation, solve_allocation
from src.core.errors import InstanceFormatError, InstanceMismatchError, ParameterError
from src.core.params import ModelParams
from src.egogen.generator import generate_ego_network
from src.social_requests.generator import generate_skeletons, materialize, unit_cap
from src.social_requests.io import read_skeletons_csv, write_requests_csv, write_skeletons_csv
from src.social_requests.model import Mode, RequestSkeleton


@pytest.fixture
def network():
    return generate_ego_network(21, size_override=30)


@pytest.mark.parametrize("gamma, expected", [
    (0.63, 8.0 / 1.29),
    (0.8, 8.0 / 1.29),
    (1.0, 8.0 / 1.29),
])
def test_unit_cap_fits_one_slot(gamma, expected):
    assert unit_cap(ModelParams(gamma=gamma)) == pytest.approx(expected)


def test_unit_cap_shrinks_when_debriefs_outgrow_the_avatar_slot():
    params = ModelParams(gamma=0.8, beta=2.0)
    assert unit_cap(params) == pytest.approx(8.0 / 2.0)
    assert unit_cap(ModelParams(gamma=1.0, beta=0.5)) == pytest.approx(8.0)


@pytest.mark.parametrize("deadline_frac", [0.1, 0.2, 0.4, 1.0])
def test_skeletons_cover_demand_within_windows(network, params, deadline_frac):
    skeletons = generate_skeletons(3, network, deadline_frac, params)
    cap = unit_cap(params)
    max_length = math.floor(deadline_frac * params.horizon_k)

    totals = defaultdict(list)
    for s in skeletons:
        totals[s.alter_id].append(s.presence_hours)
        assert 0 < s.presence_hours <= cap + 1e-12
        assert 1 <= s.window_start <= s.window_end <= params.horizon_k
        assert s.window_end - s.window_start <= max_length
    for alter in network:
        assert math.fsum(totals[alter.id]) == pytest.approx(alter.annual_demand, rel=1e-12)


def test_skeleton_indices_are_consecutive(network, params):
    skeletons = generate_skeletons(3, network, 0.2, params)
    by_alter = defaultdict(list)
    for s in skeletons:
        by_alter[s.alter_id].append(s.index)
    assert all(indices == list(range(len(indices))) for indices in by_alter.values())


def test_skeletons_are_seeded(network, params):
    assert generate_skeletons(3, network, 0.2, params) == generate_skeletons(3, network, 0.2, params)
    assert generate_skeletons(3, network, 0.2, params) != generate_skeletons(4, network, 0.2, params)


@pytest.mark.parametrize("deadline_frac", [0.0, -0.2, 1.5])
def test_deadline_frac_range(network, params, deadline_frac):
    with pytest.raises(ParameterError, match="deadline_frac"):
        generate_skeletons(0, network, deadline_frac, params)


@pytest.mark.parametrize("y_frac", [0.0, 0.25, 1.0])
def test_materialized_modes_match_the_allocation(network, y_frac):
    params = ModelParams(avatar_budget_y=y_frac * network.baseline_capacity)
    allocation = solve_allocation(network, params)
    requests = materialize(generate_skeletons(8, network, 0.2, params), allocation, params)

    physical, avatar = defaultdict(list), defaultdict(list)
    for r in requests:
        (physical if r.is_physical else avatar)[r.alter_id].append(r.duration)
        if r.is_physical:
            assert r.debrief == 0.0 and r.duration == r.presence_hours
        else:
            assert r.duration == pytest.approx(params.beta * r.presence_hours)
            assert r.debrief == pytest.approx(params.gamma * r.duration)
    for alter_id, x, y in zip(allocation.alter_ids, allocation.x, allocation.y):
        assert math.fsum(physical[alter_id]) == pytest.approx(x, abs=1e-6)
        assert math.fsum(avatar[alter_id]) == pytest.approx(y, abs=1e-6)
    assert [r.request_id for r in requests] == list(range(len(requests)))


def test_boundary_request_is_split_in_two(params):
    skeletons = [
        RequestSkeleton(alter_id=0, index=0, presence_hours=4.0, window_start=3, window_end=9),
        RequestSkeleton(alter_id=0, index=1, presence_hours=4.0, window_start=20, window_end=25),
    ]
    allocation = TimeAllocation(alter_ids=(0,), x=(5.0,), y=(3.0 * params.beta,), gamma=params.gamma)
    requests = materialize(skeletons, allocation, params)

    assert [(r.mode, r.skeleton_index) for r in requests] == [
        (Mode.PHYSICAL, 0), (Mode.PHYSICAL, 1), (Mode.AVATAR, 1),
    ]
    assert requests[1].duration == pytest.approx(1.0)
    assert requests[2].presence_hours == pytest.approx(3.0)
    assert requests[1].window == requests[2].window == (20, 25)


def test_materialize_rejects_mismatched_alters(params):
    skeletons = [RequestSkeleton(alter_id=1, index=0, presence_hours=2.0, window_start=1, window_end=1)]
    allocation = TimeAllocation(alter_ids=(0,), x=(2.0,), y=(0.0,), gamma=params.gamma)
    with pytest.raises(InstanceMismatchError):
        materialize(skeletons, allocation, params)


def test_skeleton_csv_round_trip(tmp_path, network, params):
    skeletons = generate_skeletons(5, network, 0.3, params)
    path = tmp_path / "skeletons.csv"
    write_skeletons_csv(path, skeletons)
    assert read_skeletons_csv(path) == skeletons


def test_skeleton_csv_reports_the_bad_line(tmp_path):
    path = tmp_path / "skeletons.csv"
    path.write_text("alter_id,index,presence_h,d_start,d_end\n0,0,2.5,1,4\n0,1,abc,2,3\n", encoding="utf-8")
    with pytest.raises(InstanceFormatError, match=":3:"):
        read_skeletons_csv(path)


def test_requests_csv_header(tmp_path, network, params):
    allocation = solve_allocation(network, params)
    requests = materialize(generate_skeletons(5, network, 0.3, params), allocation, params)
    path = tmp_path / "requests.csv"
    write_requests_csv(path, requests)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "alter_id,mode,duration_h,debrief_h,d_start,d_end"
    assert len(lines) == len(requests) + 1
