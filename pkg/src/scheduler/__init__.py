from src.scheduler.cost import YEAR_OFFSET, day_cost, social_cost
from src.scheduler.evaluation import CostReport, evaluate
from src.scheduler.heuristic import schedule
from src.scheduler.io import write_cost_summary_csv, write_schedule_csv, write_validation_report
from src.scheduler.ledger import Assignment, DayLedger, Schedule, build_ledger
from src.scheduler.validation import validate_schedule

__all__ = [
    "YEAR_OFFSET",
    "Assignment",
    "CostReport",
    "DayLedger",
    "Schedule",
    "build_ledger",
    "day_cost",
    "evaluate",
    "schedule",
    "social_cost",
    "validate_schedule",
    "write_cost_summary_csv",
    "write_schedule_csv",
    "write_validation_report",
]
