from src.allocator.io import read_allocation_csv, write_allocation_csv
from src.allocator.solver import (
    AllocationStrategy,
    TimeAllocation,
    allocation_objective,
    avatar_cap,
    check_feasibility,
    required_avatar_hours,
    solve_allocation,
    spare_time,
)

__all__ = [
    "AllocationStrategy",
    "TimeAllocation",
    "allocation_objective",
    "avatar_cap",
    "check_feasibility",
    "read_allocation_csv",
    "required_avatar_hours",
    "solve_allocation",
    "spare_time",
    "write_allocation_csv",
]
