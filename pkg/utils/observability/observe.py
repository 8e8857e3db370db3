"""Simple, minimal tracing decorator for infodist."""

from __future__ import annotations

from functools import wraps
from inspect import signature
from typing import Any, Callable, Optional
from contextvars import ContextVar
from dataclasses import is_dataclass, asdict
import json
import time

# Observability Attribute Size Limit
# These caps prevent trace backend explosions and keep spans readable.

MAX_STRING_PREVIEW = 512        # Max chars per string value in input preview
MAX_COLLECTION_ITEMS = 20       # Max items to show in lists/dicts
MAX_INPUT_BYTES = 6144          # Max total input JSON size (6KB)
MAX_OUTPUT_BYTES = 8192         # Max output size (8KB - common trace limit)


def observe(_fn: Optional[Callable[..., Any]] = None, *, estimator: bool = False, root: bool = False) -> Callable[..., Any]:
    """Minimal tracing decorator.

    Usage:
        @observe
        def build_tree(): ...

        @observe(estimator=True)
        def codelength(): ...

        @observe(root=True)
        def distance_matrix(): ...

    - Auto-names spans from function module.qualname
    - Records timing, exceptions, basic I/O
    - Records codelength bits when estimator=True
    - Aggregates total coded bits and estimator calls when root=True
    - No-op if OpenTelemetry unavailable
    """

    def _decorate(fn: Callable[..., Any]) -> Callable[..., Any]:
        module = getattr(fn, "__module__", "") or ""
        qualname = getattr(fn, "__qualname__", fn.__name__)
        span_name = f"{module}.{qualname}" if module else qualname

        @wraps(fn)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            try:
                from opentelemetry import trace
                tracer = trace.get_tracer("infodist")
            except Exception:
                # No OTel available - just run the function
                return fn(*args, **kwargs)

            start_time = time.perf_counter()

            with tracer.start_as_current_span(span_name) as span:
                try:
                    if root:
                        _start_bits_accumulator(span)

                    _capture_input(span, fn, args, kwargs)
                    result = fn(*args, **kwargs)

                    if estimator:
                        _capture_codelength(span, result)
                    else:
                        _capture_output(span, result)

                    return result

                except Exception as e:
                    span.record_exception(e)
                    span.set_status(trace.Status(trace.StatusCode.ERROR))
                    raise

                finally:
                    duration_ms = int((time.perf_counter() - start_time) * 1000)
                    span.set_attribute("duration_ms", duration_ms)
                    if root:
                        _finalize_bits_accumulator(span)

        return wrapper

    # Support both @observe and @observe() forms
    if callable(_fn):
        return _decorate(_fn)
    return _decorate


def _safe_preview(val: Any, max_len: int = MAX_STRING_PREVIEW) -> Any:
    """Create safe preview of a value with truncation markers."""
    if val is None or isinstance(val, (bool, int, float)):
        return val
    if isinstance(val, str):
        return val[:max_len] + ("..." if len(val) > max_len else "")
    if hasattr(val, "alphabet") and hasattr(val, "data"):
        # symbol sequences: length and alphabet size only, never the payload
        return {"length": len(val.data), "alphabet_size": val.alphabet.size}
    if isinstance(val, dict):
        result = {}
        for k, v in list(val.items())[:MAX_COLLECTION_ITEMS]:
            result[str(k)] = _safe_preview(v, max_len)
        if len(val) > MAX_COLLECTION_ITEMS:
            result["..."] = f"{len(val) - MAX_COLLECTION_ITEMS} more keys"
        return result
    if isinstance(val, (list, tuple)):
        items = [_safe_preview(v, max_len) for v in list(val)[:MAX_COLLECTION_ITEMS]]
        if len(val) > MAX_COLLECTION_ITEMS:
            items.append("...")
        return items
    if is_dataclass(val) and not isinstance(val, type):
        return _safe_preview(asdict(val), max_len)
    if hasattr(val, "model_dump"):
        return _safe_preview(val.model_dump(), max_len)
    return repr(val)[:max_len] + ("..." if len(repr(val)) > max_len else "")


def _capture_input(span: Any, fn: Callable, args: tuple, kwargs: dict) -> None:
    """Capture function inputs with size-capped previews."""
    try:
        bound = signature(fn).bind_partial(*args, **kwargs)
        inputs = {name: _safe_preview(value) for name, value in bound.arguments.items() if name not in {"self", "cls"}}

        input_str = json.dumps(inputs, ensure_ascii=False, separators=(",", ":"), default=str)
        span.set_attribute("input", input_str[:MAX_INPUT_BYTES] + ("..." if len(input_str) > MAX_INPUT_BYTES else ""))
    except Exception:
        pass


def _capture_output(span: Any, result: Any) -> None:
    """Capture outputs with structured attributes for matrices and trees."""
    try:
        if hasattr(result, "labels") and hasattr(result, "values"):
            span.set_attribute("matrix.size", len(result.labels))
            span.set_attribute("output", str(list(result.labels))[:MAX_OUTPUT_BYTES])
        elif hasattr(result, "leaf_labels"):
            span.set_attribute("tree.leaves", len(result.leaf_labels()))
            span.set_attribute("tree.rooted", bool(result.rooted))
        else:
            span.set_attribute("output", str(result)[:MAX_OUTPUT_BYTES])
    except Exception:
        pass


def _capture_codelength(span: Any, result: Any) -> None:
    """Capture codelength reports and feed the root accumulator."""
    try:
        if hasattr(result, "total_bits") and hasattr(result, "estimator_id"):
            span.set_attribute("estimator_id", str(result.estimator_id))
            span.set_attribute("codelength.bits", float(result.total_bits))
            span.set_attribute("codelength.input_length", int(result.input_length))
            span.set_attribute("codelength.rate", float(result.rate))
            _accumulate_bits(float(result.total_bits))
        else:
            span.set_attribute("output", str(result)[:MAX_OUTPUT_BYTES])
    except Exception:
        pass


# Codelength Accumulation
# Root spans start a counter; child estimator calls add to it; root finalizes totals.

_bits: ContextVar[Optional[float]] = ContextVar("bits", default=None)
_calls: ContextVar[int] = ContextVar("calls", default=0)
_owner: ContextVar[Optional[int]] = ContextVar("owner", default=None)


def _start_bits_accumulator(span: Any) -> None:
    """Initialize the coded-bits counter for a root span."""
    if _bits.get() is None:
        _bits.set(0.0)
        _calls.set(0)
        _owner.set(id(span))


def _accumulate_bits(bits: float) -> None:
    """Add the bits of one estimator call."""
    current = _bits.get()
    if isinstance(current, float):
        _bits.set(current + bits)
        _calls.set(_calls.get() + 1)


def _finalize_bits_accumulator(span: Any) -> None:
    """Write totals to the root span and reset."""
    if _owner.get() == id(span):
        total = _bits.get()
        if isinstance(total, float) and _calls.get() > 0:
            span.set_attribute("codelength.total_bits", total)
            span.set_attribute("estimator.calls", _calls.get())
        _bits.set(None)
        _calls.set(0)
        _owner.set(None)
