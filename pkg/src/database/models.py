#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Модели данных хранилища результатов
Один SweepRun на кампанию и один ExperimentRecord на строку результата
"""

from datetime import datetime, timezone

from sqlalchemy import Boolean, Column, DateTime, Float, ForeignKey, Integer, String, Text
from sqlalchemy.orm import declarative_base, relationship

# Базовый класс для моделей SQLAlchemy
Base = declarative_base()


class SweepRun(Base):
    """Одна кампания, запущенная из командной строки"""
    __tablename__ = 'sweep_runs'

    id = Column(Integer, primary_key=True)
    preset = Column(String(32), nullable=False)
    base_seed_text = Column("base_seed", String(40), nullable=False)  # зерно десятичной строкой, может превышать 63 бита
    config_json = Column(Text, nullable=True)  # SweepConfig в JSON

    start_time = Column(DateTime(timezone=True), default=lambda: datetime.now(timezone.utc))
    end_time = Column(DateTime(timezone=True), nullable=True)
    success = Column(Boolean, default=False)

    # Статистика
    total_rows = Column(Integer, default=0)
    infeasible_rows = Column(Integer, default=0)
    findings = Column(Integer, default=0)

    error_message = Column(Text, nullable=True)

    records = relationship("ExperimentRecord", back_populates="run", cascade="all, delete-orphan")

    @property
    def base_seed(self) -> int:
        return int(self.base_seed_text)

    def __repr__(self):
        return f"<SweepRun {self.id} {self.preset} - {self.start_time} {'success' if self.success else 'failed'}>"


class ExperimentRecord(Base):
    """Одна ветвь одного экземпляра"""
    __tablename__ = 'experiment_records'

    id = Column(Integer, primary_key=True)
    sweep_run_id = Column(Integer, ForeignKey('sweep_runs.id'), nullable=False, index=True)

    run_id = Column(String(128), nullable=False, index=True)
    seed = Column(String(24), nullable=False)  # 63-битное зерно десятичной строкой
    repetition = Column(Integer, default=0)
    n_alters = Column(Integer, nullable=False)
    conflict_density = Column(Float, nullable=False)
    deadline_frac = Column(Float, nullable=False)
    y_frac = Column(Float, nullable=False)
    gamma = Column(Float, nullable=False)
    arm = Column(String(8), nullable=False)

    # Метрики
    total_cost_days = Column(Integer, default=0)
    mean_cost_per_alter = Column(Float, default=0.0)
    spare_time_hours = Column(Float, default=0.0)
    n_requests = Column(Integer, default=0)
    n_year1 = Column(Integer, default=0)
    n_year2 = Column(Integer, default=0)
    n_unscheduled = Column(Integer, default=0)
    feasible = Column(Boolean, default=True)
    runtime_ms = Column(Float, default=0.0)

    run = relationship("SweepRun", back_populates="records")

    def __repr__(self):
        return f"<ExperimentRecord {self.run_id} [{self.arm}] cost={self.total_cost_days}>"
