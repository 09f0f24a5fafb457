#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
CSV файлы заготовок запросов и запросов с назначенным режимом
"""

import csv
from pathlib import Path
from typing import List, Sequence, Union

from src.core.errors import InstanceFormatError
from src.social_requests.model import MaterializedRequest, RequestSkeleton

SKELETON_FIELDS = ("alter_id", "index", "presence_h", "d_start", "d_end")
REQUEST_FIELDS = ("alter_id", "mode", "duration_h", "debrief_h", "d_start", "d_end")


def write_skeletons_csv(path: Union[str, Path], skeletons: Sequence[RequestSkeleton]) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(SKELETON_FIELDS)
        for s in skeletons:
            writer.writerow([s.alter_id, s.index, repr(s.presence_hours), s.window_start, s.window_end])


def read_skeletons_csv(path: Union[str, Path]) -> List[RequestSkeleton]:
    source = Path(path)
    skeletons: List[RequestSkeleton] = []
    with open(source, "r", encoding="utf-8", newline="") as file:
        reader = csv.DictReader(file)
        if tuple(reader.fieldnames or ()) != SKELETON_FIELDS:
            raise InstanceFormatError(f"expected header {','.join(SKELETON_FIELDS)}", str(source), 1)
        for number, row in enumerate(reader, start=2):
            try:
                skeletons.append(RequestSkeleton(
                    alter_id=int(row["alter_id"]),
                    index=int(row["index"]),
                    presence_hours=float(row["presence_h"]),
                    window_start=int(row["d_start"]),
                    window_end=int(row["d_end"]),
                ))
            except (TypeError, ValueError) as e:
                raise InstanceFormatError(str(e), str(source), number) from e
    return skeletons


def write_requests_csv(path: Union[str, Path], requests: Sequence[MaterializedRequest]) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(REQUEST_FIELDS)
        for r in requests:
            writer.writerow([r.alter_id, r.mode.value, repr(r.duration), repr(r.debrief), r.window_start, r.window_end])
