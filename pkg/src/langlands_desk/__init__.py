"""Exact desk-scale checks of local and global Langlands predictions."""

from .cartan import CartanData, SimpleType, cartan_data
from .errors import (
    DeskError,
    DomainError,
    InputError,
    InternalInvariantError,
    PrecisionError,
    ResourceGuardError,
    ValidationError,
)

__version__ = "0.1.0"

__all__ = [
    "CartanData",
    "DeskError",
    "DomainError",
    "InputError",
    "InternalInvariantError",
    "PrecisionError",
    "ResourceGuardError",
    "SimpleType",
    "ValidationError",
    "cartan_data",
]
