"""OpenTelemetry wiring for infodist: one OTLP/HTTP exporter configured from OTEL_* env vars."""

from __future__ import annotations

import os

from opentelemetry import trace
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor
from opentelemetry.sdk.resources import Resource, SERVICE_NAME
from opentelemetry.exporter.otlp.proto.http.trace_exporter import OTLPSpanExporter


def create_otel_exporter() -> OTLPSpanExporter:
    """Create an OTLP exporter; OTLPSpanExporter reads OTEL_EXPORTER_OTLP_* itself.

    Raises:
        ValueError: If OTEL_EXPORTER_OTLP_ENDPOINT is not configured
    """
    if not os.getenv("OTEL_EXPORTER_OTLP_ENDPOINT"):
        raise ValueError("OTLP exporter requires OTEL_EXPORTER_OTLP_ENDPOINT environment variable")
    return OTLPSpanExporter()


def setup_telemetry(service_name: str = "infodist") -> trace.Tracer:
    """Install a tracer provider exporting spans over OTLP.

    Environment variables:
        - OTEL_EXPORTER_OTLP_ENDPOINT (required), OTEL_EXPORTER_OTLP_HEADERS
        - OTEL_SERVICE_NAME overrides `service_name`
    """
    resource = Resource.create({SERVICE_NAME: os.getenv("OTEL_SERVICE_NAME", service_name)})
    trace_provider = TracerProvider(resource=resource)
    trace.set_tracer_provider(trace_provider)
    trace_provider.add_span_processor(BatchSpanProcessor(create_otel_exporter()))
    return trace.get_tracer(service_name)
