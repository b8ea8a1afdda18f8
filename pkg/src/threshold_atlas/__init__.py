"""Exact combinatorics of the threshold arrangement and labeled threshold graphs."""

from threshold_atlas.errors import (
    AtlasError,
    ConsistencyError,
    DomainError,
    FixedPointError,
    IntegralityError,
    SamplingError,
)
from threshold_atlas.exactmath import Polynomial

__all__ = [
    "AtlasError",
    "ConsistencyError",
    "DomainError",
    "FixedPointError",
    "IntegralityError",
    "Polynomial",
    "SamplingError",
]

__version__ = "0.1.0"
