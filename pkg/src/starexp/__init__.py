"""Exploration of temporal stars: exact, decision, approximation, reduction and random-model tools."""
from .core import (
    Exploration,
    ExplorationRejected,
    InvalidInstance,
    TemporalStar,
    Window,
    all_windows,
    canonicalize,
    conflicts,
    verify_exploration,
    windows_of,
)

__version__ = "0.1.0"
