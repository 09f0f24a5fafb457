#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Хранилище результатов экспериментов
"""

from contextlib import contextmanager
from datetime import datetime, timezone
from typing import Iterator, List, Optional, Sequence

from loguru import logger
from sqlalchemy import create_engine, select
from sqlalchemy.exc import SQLAlchemyError
from sqlalchemy.orm import Session, sessionmaker

from src.core.errors import ExperimentError
from src.database.models import Base, ExperimentRecord, SweepRun
from src.experiments.runner import ROW_FIELDS, ExperimentRow


class ResultStore:
    """Менеджер базы данных для запусков экспериментов и их строк через SQLAlchemy

    Строки приходят от одного писателя (цикл сбора эксперимента), поэтому
    достаточно одной короткой сессии на вызов.
    """

    def __init__(self, db_url: str):
        """
        Инициализация менеджера базы данных

        Args:
            db_url: URL-строка подключения SQLAlchemy, например sqlite:///results/sweeps.db
        """
        self.db_url = db_url
        self.engine = create_engine(self.db_url, echo=False)
        self.session_factory = sessionmaker(bind=self.engine, expire_on_commit=False)

    def initialize(self) -> None:
        """Инициализация базы данных - создание таблиц, если они не существуют"""
        Base.metadata.create_all(self.engine)
        logger.info(f"Result store initialized at {self.db_url}")

    @contextmanager
    def get_session(self) -> Iterator[Session]:
        """Сессия с фиксацией при успехе и откатом при любой ошибке

        Raises:
            ExperimentError: Обертка ошибок базы данных
        """
        session = self.session_factory()
        try:
            yield session
            session.commit()
        except SQLAlchemyError as e:
            session.rollback()
            logger.error(f"Result store error: {e}")
            raise ExperimentError(f"result store {self.db_url}: {e}") from e
        except Exception:
            session.rollback()
            raise
        finally:
            session.close()

    def start_run(self, preset: str, base_seed: int, config_json: Optional[str] = None) -> int:
        with self.get_session() as session:
            run = SweepRun(preset=preset, base_seed_text=str(base_seed), config_json=config_json)
            session.add(run)
            session.flush()
            run_id = run.id
        logger.debug(f"Sweep run {run_id} started ({preset}, seed {base_seed})")
        return run_id

    def add_rows(self, sweep_run_id: int, rows: Sequence[ExperimentRow]) -> None:
        with self.get_session() as session:
            for row in rows:
                record = row.as_record()
                record["seed"] = str(record["seed"])
                session.add(ExperimentRecord(sweep_run_id=sweep_run_id, repetition=row.repetition, **record))

    def finish_run(
        self,
        sweep_run_id: int,
        success: bool,
        findings: int = 0,
        error_message: Optional[str] = None,
    ) -> None:
        with self.get_session() as session:
            run = session.get(SweepRun, sweep_run_id)
            if run is None:
                raise ExperimentError(f"unknown sweep run {sweep_run_id}")
            records = session.scalars(
                select(ExperimentRecord).where(ExperimentRecord.sweep_run_id == sweep_run_id)
            ).all()
            run.end_time = datetime.now(timezone.utc)
            run.success = success
            run.total_rows = len(records)
            run.infeasible_rows = sum(1 for r in records if not r.feasible)
            run.findings = findings
            run.error_message = error_message
        logger.info(f"Sweep run {sweep_run_id} closed: {'success' if success else 'failed'}")

    def get_run(self, sweep_run_id: int) -> Optional[SweepRun]:
        with self.get_session() as session:
            return session.get(SweepRun, sweep_run_id)

    def list_rows(self, sweep_run_id: int) -> List[ExperimentRow]:
        """Строки одного запуска в порядке сортировки эксперимента"""
        with self.get_session() as session:
            records = session.scalars(
                select(ExperimentRecord).where(ExperimentRecord.sweep_run_id == sweep_run_id)
            ).all()
        rows = [
            ExperimentRow(
                **{name: getattr(r, name) for name in ROW_FIELDS if name != "seed"},
                seed=int(r.seed),
                repetition=r.repetition,
            )
            for r in records
        ]
        return sorted(rows, key=lambda row: row.sort_key)
