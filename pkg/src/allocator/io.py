#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
CSV распределения: alter_id,x_hours,y_hours
"""

import csv
from pathlib import Path
from typing import Union

from src.allocator.solver import TimeAllocation
from src.core.errors import InstanceFormatError

ALLOCATION_FIELDS = ("alter_id", "x_hours", "y_hours")


def write_allocation_csv(path: Union[str, Path], allocation: TimeAllocation) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(ALLOCATION_FIELDS)
        for alter_id, x, y in zip(allocation.alter_ids, allocation.x, allocation.y):
            writer.writerow([alter_id, repr(x), repr(y)])


def read_allocation_csv(path: Union[str, Path], gamma: float) -> TimeAllocation:
    source = Path(path)
    ids, xs, ys = [], [], []
    with open(source, "r", encoding="utf-8", newline="") as file:
        reader = csv.DictReader(file)
        if tuple(reader.fieldnames or ()) != ALLOCATION_FIELDS:
            raise InstanceFormatError(f"expected header {','.join(ALLOCATION_FIELDS)}", str(source), 1)
        for number, row in enumerate(reader, start=2):
            try:
                ids.append(int(row["alter_id"]))
                xs.append(float(row["x_hours"]))
                ys.append(float(row["y_hours"]))
            except (TypeError, ValueError) as e:
                raise InstanceFormatError(str(e), str(source), number) from e
    return TimeAllocation(alter_ids=tuple(ids), x=tuple(xs), y=tuple(ys), gamma=gamma)
