import math

import numpy as np
import pandas as pd
import pytest
from loguru import logger

from src.core.errors import ExperimentError, ParameterError
from src.experiments.config import Cell, SpareTimeConfig, SweepConfig, preset
from src.experiments.runner import (
    PARTIAL_ROWS_FILE,
    ROW_FIELDS,
    ROWS_FILE,
    ExperimentRow,
    instance_seeds,
    is_finding,
    read_rows_csv,
    run_cell,
    run_id_for,
    sweep,
    write_rows_csv,
)
from src.experiments.spare_time import CURVE_FILE, run_spare_time
from src.experiments.summary import pair_rows, summarize, write_summary

TINY = SweepConfig(
    preset="tiny",
    repetitions=2,
    network_sizes=(12,),
    conflict_densities=(0.0, 0.4),
    deadline_fracs=(0.2,),
    y_fracs=(1.0,),
    gammas=(0.63, 0.8),
    horizon_k=60,
)


def _row(run_id: str, arm: str, cost: int, gamma: float = 0.63, feasible: bool = True) -> ExperimentRow:
    return ExperimentRow(
        run_id=run_id, seed=1, n_alters=10, conflict_density=0.2, deadline_frac=0.2, y_frac=1.0,
        gamma=gamma, arm=arm, total_cost_days=cost, mean_cost_per_alter=cost / 10, spare_time_hours=0.0,
        n_requests=5, n_year1=5, n_year2=0, n_unscheduled=0, feasible=feasible, runtime_ms=0.0,
        per_alter_cost=(cost,) + (0,) * 9,
    )


def test_full_grid_size():
    grid = preset("table2")
    assert grid.n_cells == 960
    assert grid.n_rows == 19_200
    assert len(list(grid.cells())) == grid.n_cells


def test_unknown_preset():
    with pytest.raises(ParameterError, match="preset"):
        preset("fig99")


@pytest.mark.parametrize("field, value", [
    ("conflict_densities", (0.2, 1.2)),
    ("deadline_fracs", (0.0,)),
    ("gammas", ()),
    ("network_sizes", (2,)),
])
def test_sweep_grid_validation(field, value):
    with pytest.raises(ValueError, match=field):
        SweepConfig(**{field: value})


def test_spare_time_gammas_end_at_the_regime_boundary():
    gammas = SpareTimeConfig().gammas()
    assert gammas[0] == pytest.approx(0.01)
    assert gammas[-1] == 1 / 1.29
    assert all(a < b for a, b in zip(gammas, gammas[1:]))


def test_instance_seeds_ignore_gamma_and_budget():
    base = Cell(68, 0.4, 0.2, 0.5, 0.2)
    other = Cell(68, 0.4, 0.2, 1.0, 0.8)
    assert instance_seeds(0, base, 3) == instance_seeds(0, other, 3)
    assert instance_seeds(0, base, 3) != instance_seeds(0, base, 4)
    assert instance_seeds(0, base, 3).network == instance_seeds(0, Cell(68, 0.8, 0.3, 0.5, 0.2), 3).network


def test_run_id_format():
    assert run_id_for(Cell(68, 0.4, 0.2, 0.5, 0.63), 7) == "n68-d0.4-f0.2-y0.5-g0.63-r7"


def test_run_cell_is_deterministic():
    cell = Cell(12, 0.4, 0.2, 1.0, 0.63)
    first = run_cell(cell, 0, TINY)
    assert first == run_cell(cell, 0, TINY)
    assert [row.arm for row in first] == ["A", "nonA"]
    assert first[0].run_id == first[1].run_id
    assert first[0].runtime_ms == 0.0


def test_arms_agree_when_debriefing_is_too_expensive():
    avatar, baseline = run_cell(Cell(12, 0.4, 0.2, 1.0, 0.8), 1, TINY)
    assert avatar.total_cost_days == baseline.total_cost_days
    assert avatar.spare_time_hours == baseline.spare_time_hours == 0.0
    assert avatar.n_requests == baseline.n_requests


def test_avatar_arm_frees_time():
    avatar, baseline = run_cell(Cell(12, 0.0, 0.2, 1.0, 0.2), 0, TINY)
    assert avatar.spare_time_hours > 0.0
    assert baseline.spare_time_hours == 0.0
    assert avatar.feasible and baseline.feasible


def test_finding_needs_a_beneficial_gamma():
    assert is_finding(_row("a", "A", 5), _row("a", "nonA", 3), beta=1.29)
    assert not is_finding(_row("a", "A", 5, gamma=0.8), _row("a", "nonA", 3, gamma=0.8), beta=1.29)
    assert not is_finding(_row("a", "A", 5, feasible=False), _row("a", "nonA", 3), beta=1.29)


def test_pair_rows_improvement():
    rows = [_row("a", "A", 2), _row("a", "nonA", 8), _row("b", "A", 0), _row("b", "nonA", 0)]
    paired = pair_rows(rows).set_index("run_id")
    assert paired.loc["a", "improvement_pct"] == pytest.approx(75.0)
    assert math.isnan(paired.loc["b", "improvement_pct"])


def test_summarize_rejects_bad_input():
    with pytest.raises(ExperimentError, match="no rows"):
        summarize([])
    with pytest.raises(ExperimentError, match="lack a row per arm"):
        summarize([_row("a", "A", 2)])


def test_summary_tables():
    rows = [_row("a", "A", 2), _row("a", "nonA", 8), _row("b", "A", 12), _row("b", "nonA", 4)]
    tables = summarize(rows, network_sizes=[50, 50, 120])
    assert set(tables) == {
        "fig7_sizes", "fig8_density", "fig9_per_alter", "fig10_deadline", "fig10_y", "fig10_gamma", "findings",
    }
    assert tables["fig7_sizes"].to_dict(orient="list") == {"size": [50, 120], "count": [2, 1]}
    density = tables["fig8_density"].iloc[0]
    assert density["cost_A"] == 7.0 and density["cost_nonA"] == 6.0
    assert list(tables["findings"]["run_id"]) == ["b"]

    histogram = tables["fig9_per_alter"]
    avatar = histogram[histogram["arm"] == "A"].set_index("cost_low")["alters"]
    assert avatar.sum() == 20
    assert avatar[0.0] == 18 and avatar[2.0] == 1 and avatar[10.0] == 1


def test_write_summary(tmp_path):
    rows = [_row("a", "A", 2), _row("a", "nonA", 8)]
    write_summary(summarize(rows), tmp_path)
    assert (tmp_path / "fig8_density.csv").exists()
    assert pd.read_csv(tmp_path / "fig10_gamma.csv")["improvement_pct"].tolist() == [75.0]


def test_rows_csv_round_trip(tmp_path):
    rows = list(run_cell(Cell(12, 0.4, 0.2, 1.0, 0.63), 3, TINY))
    path = tmp_path / "rows.csv"
    write_rows_csv(path, rows)
    loaded = read_rows_csv(path)
    assert [r.run_id for r in loaded] == [r.run_id for r in rows]
    assert [r.total_cost_days for r in loaded] == [r.total_cost_days for r in rows]
    assert [r.repetition for r in loaded] == [3, 3]
    assert [r.feasible for r in loaded] == [r.feasible for r in rows]


def test_read_rows_csv_requires_every_column(tmp_path):
    path = tmp_path / "rows.csv"
    path.write_text("run_id,seed\nx,1\n", encoding="utf-8")
    with pytest.raises(ExperimentError, match="missing columns"):
        read_rows_csv(path)


def test_sweep_writes_sorted_rows(tmp_path):
    seen = []
    rows = sweep(TINY, tmp_path, jobs=1, on_rows=seen.extend)
    assert len(rows) == TINY.n_rows == len(seen)
    assert rows == sorted(rows, key=lambda r: r.sort_key)
    assert not (tmp_path / PARTIAL_ROWS_FILE).exists()
    frame = pd.read_csv(tmp_path / ROWS_FILE)
    assert tuple(frame.columns) == ROW_FIELDS
    assert len(frame) == TINY.n_rows


def test_sweep_output_is_independent_of_workers(tmp_path):
    sweep(TINY, tmp_path / "serial", jobs=1)
    sweep(TINY, tmp_path / "parallel", jobs=2)
    serial = (tmp_path / "serial" / ROWS_FILE).read_bytes()
    assert serial == (tmp_path / "parallel" / ROWS_FILE).read_bytes()


def test_spare_time_curve(tmp_path):
    curve = run_spare_time(SpareTimeConfig(), tmp_path)
    assert (tmp_path / CURVE_FILE).exists()
    full = curve[np.isclose(curve["y_budget"], 1288.0)]
    at_02 = full[np.isclose(full["gamma"], 0.2)]
    assert at_02["spare_time_hours"].iloc[0] == pytest.approx(740.85, abs=0.01)
    assert full["spare_time_hours"].iloc[-1] == pytest.approx(0.0, abs=1e-6)
    for _, group in curve.groupby("y_budget"):
        spare = group.sort_values("gamma")["spare_time_hours"].to_numpy()
        assert (np.diff(spare) <= 1e-9).all()


def _campaign(densities, y_fracs, gammas, repetitions=10) -> pd.DataFrame:
    config = SweepConfig(
        repetitions=repetitions,
        network_sizes=(68,),
        conflict_densities=densities,
        deadline_fracs=(0.2,),
        y_fracs=y_fracs,
        gammas=gammas,
    )
    rows = [row for cell in config.cells() for rep in range(repetitions) for row in run_cell(cell, rep, config)]
    return pair_rows(rows)


@pytest.mark.slow
def test_conflicts_and_the_avatar_move_cost_in_opposite_directions():
    paired = _campaign((0.0, 0.2, 0.4, 0.6, 0.8), (1.0,), (0.63,))
    by_density = paired.groupby("conflict_density")[["cost_A", "cost_nonA", "improvement_pct"]].mean()

    assert (np.diff(by_density["cost_nonA"].to_numpy()) >= 0).all()
    assert (by_density["cost_A"] <= by_density["cost_nonA"]).all()

    loaded = by_density[by_density["cost_nonA"] > 0]
    assert (loaded["improvement_pct"] > 0).all()
    assert by_density.loc[0.8, "improvement_pct"] < by_density.loc[0.2, "improvement_pct"]

    improvement = loaded["improvement_pct"]
    in_band = improvement.between(60.0, 99.0)
    logger.info(
        f"Improvement by density: {improvement.round(1).to_dict()}, "
        f"{int(in_band.sum())}/{len(improvement)} densities within 60-99%"
    )


@pytest.mark.slow
def test_avatar_budget_saturates():
    paired = _campaign((0.4,), (0.25, 0.5, 0.75, 1.0), (0.63,))
    cost = paired.groupby("y_frac")["cost_A"].mean()
    assert cost[0.75] == cost[1.0]
    assert cost[0.25] - cost[0.5] > cost[0.75] - cost[1.0]


@pytest.mark.slow
def test_arms_are_identical_above_the_regime_boundary():
    paired = _campaign((0.0, 0.4, 0.8), (0.5, 1.0), (0.8,), repetitions=3)
    assert (paired["cost_A"] == paired["cost_nonA"]).all()
