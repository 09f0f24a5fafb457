from src.oracle.allocation import AllocationOracleResult, allocation_oracle
from src.oracle.exact import OracleResult, exact_schedule

__all__ = [
    "AllocationOracleResult",
    "OracleResult",
    "allocation_oracle",
    "exact_schedule",
]
