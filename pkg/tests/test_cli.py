import pandas as pd
import pytest
import yaml

from src.main import EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE, main


@pytest.fixture(autouse=True)
def isolated(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)


def _config(tmp_path, **values):
    data = {"network_size": 10, "log_level": "WARNING"}
    data.update(values)
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump(data), encoding="utf-8")
    return str(path)


def _gen(tmp_path, name="instance", seed=1, **values):
    out = tmp_path / name
    assert main(["--config", _config(tmp_path, **values), "gen", "--seed", str(seed), "--out", str(out)]) == EXIT_OK
    return out


def test_gen_writes_the_instance(tmp_path):
    out = _gen(tmp_path)
    assert (out / "instance.txt").read_text(encoding="utf-8").startswith("n=10\n")
    assert (out / "skeletons.csv").exists()
    assert yaml.safe_load((out / "config.used.yaml").read_text(encoding="utf-8"))["seed"] == 1


def test_gen_is_reproducible(tmp_path):
    first = _gen(tmp_path, "a", seed=4)
    second = _gen(tmp_path, "b", seed=4)
    other = _gen(tmp_path, "c", seed=5)
    for name in ("instance.txt", "skeletons.csv"):
        assert (first / name).read_bytes() == (second / name).read_bytes()
    assert (first / "skeletons.csv").read_bytes() != (other / "skeletons.csv").read_bytes()


def test_invalid_density_is_a_usage_error(tmp_path):
    config = _config(tmp_path, conflict_density=1.2)
    assert main(["--config", config, "gen", "--out", str(tmp_path / "x")]) == EXIT_USAGE
    assert not (tmp_path / "x").exists()


def test_run_avatar_arm(tmp_path):
    instance = _gen(tmp_path)
    out = tmp_path / "run"
    assert main(["--config", _config(tmp_path), "run", "--instance", str(instance), "--out", str(out)]) == EXIT_OK
    for name in ("allocation.csv", "requests.csv", "schedule.csv", "cost_summary.csv", "validation.txt"):
        assert (out / name).exists()
    assert (out / "validation.txt").read_text(encoding="utf-8") == "OK\n"
    assert pd.read_csv(out / "allocation.csv")["y_hours"].sum() > 0


def test_run_baseline_arm_has_no_avatar_hours(tmp_path):
    instance = _gen(tmp_path)
    out = tmp_path / "run"
    code = main(["--config", _config(tmp_path), "run", "--instance", str(instance), "--arm", "nonA", "--out", str(out)])
    assert code == EXIT_OK
    assert (pd.read_csv(out / "allocation.csv")["y_hours"] == 0).all()
    assert set(pd.read_csv(out / "schedule.csv")["mode"]) == {"physical"}


def test_run_both_arms(tmp_path):
    instance = _gen(tmp_path)
    out = tmp_path / "run"
    code = main(["--config", _config(tmp_path), "run", "--instance", str(instance), "--arm", "both", "--out", str(out)])
    assert code == EXIT_OK
    assert (out / "A" / "schedule.csv").exists()
    assert (out / "nonA" / "schedule.csv").exists()


def test_run_reports_unschedulable_requests(tmp_path):
    instance = _gen(tmp_path)
    out = tmp_path / "run"
    config = _config(tmp_path, slot_hours=0.5)
    assert main(["--config", config, "run", "--instance", str(instance), "--out", str(out)]) == EXIT_INFEASIBLE
    assert "unscheduled requests:" in (out / "validation.txt").read_text(encoding="utf-8")


def test_run_reports_an_infeasible_allocation(tmp_path):
    instance = _gen(tmp_path)
    config = _config(tmp_path, gamma=0.8, x_prime_hours=10.0)
    assert main(["--config", config, "run", "--instance", str(instance), "--out", str(tmp_path / "run")]) == EXIT_INFEASIBLE


def test_run_without_instance_files(tmp_path):
    assert main(["--config", _config(tmp_path), "run", "--instance", str(tmp_path / "nothing")]) == EXIT_USAGE


def test_unknown_command_exits_with_usage():
    with pytest.raises(SystemExit) as e:
        main(["bogus"])
    assert e.value.code == EXIT_USAGE


def test_single_cell_sweep(tmp_path):
    out = tmp_path / "sweep"
    config = _config(tmp_path, repetitions=2, k_days=60, results_db=f"sqlite:///{tmp_path / 'sweeps.db'}")
    assert main(["--config", config, "sweep", "--jobs", "1", "--out", str(out)]) == EXIT_OK
    rows = pd.read_csv(out / "rows.csv")
    assert len(rows) == 4
    assert set(rows["arm"]) == {"A", "nonA"}
    for name in ("fig7_sizes", "fig8_density", "fig9_per_alter", "fig10_deadline", "fig10_y", "fig10_gamma", "findings"):
        assert (out / f"{name}.csv").exists()
    assert (tmp_path / "sweeps.db").exists()


def test_spare_time_preset(tmp_path):
    out = tmp_path / "fig3"
    assert main(["--config", _config(tmp_path), "sweep", "--preset", "fig3", "--out", str(out)]) == EXIT_OK
    curve = pd.read_csv(out / "fig3_spare_time.csv")
    assert list(curve.columns) == ["gamma", "y_budget", "y_sum", "spare_time_hours"]


@pytest.mark.slow
def test_ci_preset_is_reproducible(tmp_path):
    config = _config(tmp_path)
    first, second = tmp_path / "first", tmp_path / "second"
    assert main(["--config", config, "sweep", "--preset", "ci", "--jobs", "1", "--seed", "3", "--out", str(first)]) == EXIT_OK
    assert main(["--config", config, "sweep", "--preset", "ci", "--jobs", "2", "--seed", "3", "--out", str(second)]) == EXIT_OK
    for name in ("rows.csv", "fig8_density.csv", "fig10_gamma.csv"):
        assert (first / name).read_bytes() == (second / name).read_bytes()
