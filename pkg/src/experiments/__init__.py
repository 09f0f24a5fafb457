from src.experiments.config import PRESETS, Cell, SpareTimeConfig, SweepConfig, preset
from src.experiments.runner import (
    ROW_FIELDS,
    Arm,
    ExperimentRow,
    instance_seeds,
    is_finding,
    read_rows_csv,
    run_cell,
    sweep,
    write_rows_csv,
)
from src.experiments.spare_time import run_spare_time, spare_time_curve
from src.experiments.summary import pair_rows, summarize, write_summary

__all__ = [
    "PRESETS",
    "ROW_FIELDS",
    "Arm",
    "Cell",
    "ExperimentRow",
    "SpareTimeConfig",
    "SweepConfig",
    "instance_seeds",
    "is_finding",
    "pair_rows",
    "preset",
    "read_rows_csv",
    "run_cell",
    "run_spare_time",
    "spare_time_curve",
    "summarize",
    "sweep",
    "write_rows_csv",
    "write_summary",
]
