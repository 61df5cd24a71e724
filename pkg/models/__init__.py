"""Run configuration and report models."""
from .schemas import ReportEnvelope, RunConfig

__all__ = [
    "ReportEnvelope",
    "RunConfig",
]
