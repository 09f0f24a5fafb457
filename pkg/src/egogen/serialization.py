#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Построчный текстовый формат экземпляров (сеть + граф конфликтов)

    n=<int>
    alter <id> <layer> <hours>
    edge <i> <j>

Часы записываются кратчайшим точным repr, поэтому dump/load сохраняет биты.
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

from loguru import logger

from src.core.errors import InstanceFormatError
from src.core.network import Alter, ConflictGraph, EgoNetwork, Layer


def dump_instance(network: EgoNetwork, conflicts: ConflictGraph) -> str:
    lines = [f"n={len(network)}"]
    lines += [f"alter {a.id} {a.layer.value} {a.annual_demand!r}" for a in network.alters]
    lines += [f"edge {i} {j}" for i, j in conflicts.sorted_edges()]
    return "\n".join(lines) + "\n"


def load_instance(text: str, path: Optional[str] = None) -> Tuple[EgoNetwork, ConflictGraph]:
    """Разбирает текст, созданный dump_instance

    Raises:
        InstanceFormatError: При отсутствии заголовка или некорректной строке
    """
    n: Optional[int] = None
    alters: List[Alter] = []
    edges: List[Tuple[int, int]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            if line.startswith("n="):
                n = int(line[2:])
                continue
            kind, *fields = line.split()
            if kind == "alter" and len(fields) == 3:
                alters.append(Alter(id=int(fields[0]), layer=Layer(fields[1]), annual_demand=float(fields[2])))
            elif kind == "edge" and len(fields) == 2:
                edges.append((int(fields[0]), int(fields[1])))
            else:
                raise InstanceFormatError(f"unexpected line {line!r}", path, number)
        except (ValueError, TypeError) as e:
            raise InstanceFormatError(str(e), path, number) from e

    if n is None:
        raise InstanceFormatError("missing n=<int> header", path)
    if len(alters) != n:
        raise InstanceFormatError(f"header says n={n} but {len(alters)} alters found", path)
    return EgoNetwork(alters=tuple(alters)), ConflictGraph.from_pairs(n, edges)


def write_instance(path: Union[str, Path], network: EgoNetwork, conflicts: ConflictGraph) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="\n") as file:
        file.write(dump_instance(network, conflicts))
    logger.info(f"Instance written to {target} ({len(network)} alters, {len(conflicts.edges)} conflicts)")


def read_instance(path: Union[str, Path]) -> Tuple[EgoNetwork, ConflictGraph]:
    source = Path(path)
    with open(source, "r", encoding="utf-8") as file:
        return load_instance(file.read(), str(source))
