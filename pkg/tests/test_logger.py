import json
import logging

import pytest

from src.fusion.logger import JsonFormatter, level_from_flags, pair_context, setup_logging


@pytest.fixture
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers = handlers
    root.setLevel(level)


def test_formatter_schema():
    record = logging.LogRecord("fusion.sweep_runner", logging.INFO, __file__, 1, "Sweep done", None, None)
    record.context = {"type": "A2", "pairs": 4}
    payload = json.loads(JsonFormatter().format(record))
    assert payload["level"] == "INFO"
    assert payload["service"] == "fusion-engine"
    assert payload["module"] == "fusion.sweep_runner"
    assert payload["message"] == "Sweep done"
    assert payload["context"] == {"type": "A2", "pairs": 4}
    assert payload["trace_id"]


def test_formatter_without_context():
    record = logging.LogRecord("fusion", logging.DEBUG, __file__, 1, "plain", None, None)
    assert "context" not in json.loads(JsonFormatter().format(record))


def test_pair_context():
    assert pair_context("G2", (1, 0), (0, 1), lemma="G2 recursions") == {
        "context": {"type": "G2", "lambda": [1, 0], "mu": [0, 1], "lemma": "G2 recursions"}
    }
    assert pair_context("C2", max_coord=3) == {"context": {"type": "C2", "max_coord": 3}}


@pytest.mark.parametrize(
    "verbose, quiet, level",
    [(False, False, logging.INFO), (True, False, logging.DEBUG), (False, True, logging.WARNING), (True, True, logging.DEBUG)],
)
def test_level_from_flags(verbose, quiet, level):
    assert level_from_flags(verbose, quiet) == level


def test_records_go_to_current_stderr(capsys, restore_root_logger):
    logger = setup_logging("fusion.test", logging.INFO)
    logger.info("to stderr", extra=pair_context("A2", (1, 0), (0, 1)))
    captured = capsys.readouterr()
    assert captured.out == ""
    line = json.loads(captured.err.strip().splitlines()[-1])
    assert line["message"] == "to stderr"
    assert line["context"]["lambda"] == [1, 0]
