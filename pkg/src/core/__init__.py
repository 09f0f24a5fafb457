from src.core.errors import (
    ExperimentError,
    InfeasibleAllocationError,
    InstanceFormatError,
    InstanceMismatchError,
    InstanceTooLargeError,
    ParameterError,
    SpareTimeError,
)
from src.core.network import Alter, ConflictGraph, EgoNetwork, Layer
from src.core.params import ModelParams, derive_gamma
from src.core.validation import Violation, validate_instance

__all__ = [
    "Alter",
    "ConflictGraph",
    "EgoNetwork",
    "ExperimentError",
    "InfeasibleAllocationError",
    "InstanceFormatError",
    "InstanceMismatchError",
    "InstanceTooLargeError",
    "Layer",
    "ModelParams",
    "ParameterError",
    "SpareTimeError",
    "Violation",
    "derive_gamma",
    "validate_instance",
]
