import logging

import pytest

from apps.core.middleware import log_middleware
from apps.core.middleware.log_middleware import summarize_query


class RecordingLogger:
    def __init__(self):
        self.records = []

    def log(self, level, msg, *args):
        self.records.append((level, msg % args))


@pytest.fixture
def recorder(monkeypatch):
    logger = RecordingLogger()
    monkeypatch.setattr(log_middleware, "logger", logger)
    return logger


def test_summarize_query_truncates_long_values():
    summary = summarize_query({"b": "x" * 100, "a": "1"})
    assert list(summary) == ["a", "b"]
    assert summary["b"] == "x" * 64 + "..."


def test_api_requests_are_logged(client, recorder):
    client.get("/api/catalog", {"k": 0, "max_nodes": 1, "max_edges": 0})
    assert len(recorder.records) == 1
    level, line = recorder.records[0]
    assert level == logging.INFO
    assert line.startswith("GET /api/catalog 200 ")


def test_client_errors_log_at_warning(client, recorder):
    client.get("/api/catalog", {"k": -1, "max_nodes": 1, "max_edges": 0})
    assert recorder.records[0][0] == logging.WARNING


def test_docs_are_not_logged(client, recorder):
    client.get("/api/openapi.json")
    assert recorder.records == []
