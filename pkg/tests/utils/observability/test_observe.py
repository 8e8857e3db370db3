"""Tests for @observe decorator."""

from dataclasses import dataclass
from unittest.mock import MagicMock, patch

import pytest

from infodist.estimators import CodelengthReport, KTEstimator
from utils.observability import tracing_requested
from utils.observability.observe import _safe_preview, observe
from tests.conftest import bits


@pytest.fixture
def mock_span():
    """Patch the OpenTelemetry tracer and hand back the span every call enters."""
    pytest.importorskip("opentelemetry")
    span = MagicMock()
    tracer = MagicMock()
    tracer.start_as_current_span.return_value.__enter__.return_value = span
    with patch("opentelemetry.trace.get_tracer", return_value=tracer):
        span.tracer = tracer
        yield span


def _attributes(span) -> dict:
    return {call[0][0]: call[0][1] for call in span.set_attribute.call_args_list}


class TestSafePreview:
    def test_preview_primitives(self):
        assert _safe_preview(None) is None
        assert _safe_preview(True) is True
        assert _safe_preview(42) == 42
        assert _safe_preview(3.14) == 3.14

    def test_preview_long_string_truncated(self):
        result = _safe_preview("x" * 1000, max_len=100)
        assert len(result) == 103
        assert result.endswith("...")

    def test_symbol_strings_show_shape_only(self):
        assert _safe_preview(bits("0110")) == {"length": 4, "alphabet_size": 2}

    def test_preview_list_truncates_with_marker(self):
        result = _safe_preview(list(range(50)))
        assert len(result) == 21
        assert result[-1] == "..."

    def test_preview_dict_truncates_with_marker(self):
        result = _safe_preview({f"key{i}": i for i in range(50)})
        assert "30 more keys" in result["..."]
        assert len([k for k in result if k != "..."]) == 20

    def test_preview_dataclass(self):
        @dataclass
        class Trial:
            source: str
            length: int

        assert _safe_preview(Trial("uniform", 1000)) == {"source": "uniform", "length": 1000}


class TestObserveDecorator:
    def test_runs_function(self):
        @observe
        def add(x, y):
            return x + y

        assert add(2, 3) == 5

    def test_flag_forms(self):
        @observe(root=True)
        def root_func():
            return "done"

        @observe(estimator=True)
        def coder():
            return CodelengthReport(3.0, 2, "stub")

        assert root_func() == "done"
        assert coder().rate == 1.5

    def test_preserves_function_name(self):
        @observe
        def my_function():
            """My docstring."""
            return 42

        assert my_function.__name__ == "my_function"
        assert my_function.__doc__ == "My docstring."

    def test_exceptions_propagate(self):
        @observe
        def failing_func():
            raise ValueError("test error")

        with pytest.raises(ValueError, match="test error"):
            failing_func()

    def test_span_named_after_function(self, mock_span):
        @observe
        def build():
            return "result"

        assert build() == "result"
        span_name = mock_span.tracer.start_as_current_span.call_args[0][0]
        assert span_name.endswith("build")

    def test_inputs_and_duration_recorded(self, mock_span):
        @observe
        def double(x):
            return x * 2

        assert double(21) == 42
        attrs = _attributes(mock_span)
        assert attrs["input"] == '{"x":21}'
        assert attrs["output"] == "42"
        assert "duration_ms" in attrs

    def test_estimator_spans_carry_codelength(self, mock_span):
        KTEstimator(0).codelength(bits("01"))
        attrs = _attributes(mock_span)
        assert attrs["estimator_id"] == "kt(0)"
        assert attrs["codelength.bits"] == pytest.approx(3.0)
        assert attrs["codelength.input_length"] == 2

    def test_root_span_totals_estimator_bits(self, mock_span):
        @observe(root=True)
        def sweep():
            est = KTEstimator(0)
            return est.codelength(bits("01")).total_bits + est.codelength(bits("0")).total_bits

        assert sweep() == pytest.approx(4.0)
        attrs = _attributes(mock_span)
        assert attrs["codelength.total_bits"] == pytest.approx(4.0)
        assert attrs["estimator.calls"] == 2

    def test_errors_mark_the_span(self, mock_span):
        @observe
        def failing():
            raise RuntimeError("boom")

        with pytest.raises(RuntimeError):
            failing()
        mock_span.record_exception.assert_called_once()


@pytest.mark.parametrize("value, expected", [("otel", True), ("1", True), ("TRUE", True), ("", False), ("no", False)])
def test_tracing_requested(monkeypatch, value, expected):
    monkeypatch.setenv("INFODIST_TRACE", value)
    assert tracing_requested() is expected
