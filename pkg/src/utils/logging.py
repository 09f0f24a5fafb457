#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Настройка логгера для инструментов командной строки
"""

import sys
from pathlib import Path
from typing import Optional

from loguru import logger

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level:<8} | {name}:{function}:{line} - {message}"


def setup_logging(level: str = "INFO", log_file: Optional[str] = None) -> None:
    """Заменяет стандартный обработчик loguru на stderr и необязательный файл с ротацией

    Args:
        level: Минимальный уровень для обоих обработчиков
        log_file: Путь к файлу лога (необязательно)
    """
    logger.remove()  # Удаление стандартного обработчика
    logger.add(sys.stderr, level=level, format=LOG_FORMAT)  # Вывод в консоль

    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            str(path),
            level=level,
            format=LOG_FORMAT,
            rotation="10 MB",
            retention=5,
            encoding="utf-8",
        )
