"""Observability utilities for infodist.

- @observe decorator for automatic span creation
- OpenTelemetry setup with an OTLP exporter (optional extra)
- Codelength aggregation per root span
"""

from .observe import observe


# Lazy imports to avoid requiring OpenTelemetry
def setup_telemetry(*args, **kwargs):
    """Set up OpenTelemetry tracing."""
    from .otel_setup import setup_telemetry as _setup_telemetry
    return _setup_telemetry(*args, **kwargs)


def tracing_requested() -> bool:
    """True when the environment asks for tracing (no OpenTelemetry import needed)."""
    import os
    return os.getenv("INFODIST_TRACE", "").strip().lower() in {"otel", "1", "true"}


__all__ = ["observe", "setup_telemetry", "tracing_requested"]
