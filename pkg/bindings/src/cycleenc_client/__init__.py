"""In-memory graph feature extraction backed by the cycleenc CLI."""

from __future__ import annotations

__version__ = "0.1.0"

from .client import (
    ClientError,
    ComputationError,
    FeatureRequest,
    UsageError,
    ValidationError,
    decode_npy,
    extract,
)

__all__ = [
    "ClientError",
    "ComputationError",
    "FeatureRequest",
    "UsageError",
    "ValidationError",
    "decode_npy",
    "extract",
]
