import datetime
import json
import logging
import sys
import uuid
from typing import Any, Dict, Iterable, Optional

# One correlation id per process; sweep workers get their own.
_TRACE_ID = str(uuid.uuid4())

SERVICE_NAME = "fusion-engine"


class JsonFormatter(logging.Formatter):
    """
    Formatter that outputs one JSON object per record, following observability/metrics.md.
    Schema:
    {
      "level": "DEBUG | INFO | WARNING | ERROR",
      "timestamp": "ISO-8601",
      "service": "fusion-engine",
      "module": "fusion.lemma_verifier",
      "trace_id": "<correlation_id>",
      "message": "Human readable event description",
      "context": { "type": "C2", "lambda": [1, 1], "mu": [1, 0] }
    }
    """

    def format(self, record: logging.LogRecord) -> str:
        log_record = {
            "level": record.levelname,
            "timestamp": datetime.datetime.fromtimestamp(record.created, tz=datetime.timezone.utc).isoformat(),
            "service": SERVICE_NAME,
            "module": record.name,
            "trace_id": _TRACE_ID,
            "message": record.getMessage(),
        }

        if hasattr(record, "context"):
            log_record["context"] = record.context

        if record.exc_info:
            log_record["exc_info"] = self.formatException(record.exc_info)

        return json.dumps(log_record, default=str)


class StderrHandler(logging.StreamHandler):
    """Writes to whatever ``sys.stderr`` is at emit time.

    Click's test runner swaps the standard streams per invocation and closes
    them afterwards; binding the stream once would leave a dead handler behind.
    """

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def level_from_flags(verbose: bool, quiet: bool) -> int:
    if verbose:
        return logging.DEBUG
    if quiet:
        return logging.WARNING
    return logging.INFO


def setup_logging(module_name: str = "fusion", level: int = logging.INFO) -> logging.Logger:
    """
    Installs the JSON formatter on the root logger.

    Records go to stderr: stdout carries the data payloads and must stay
    byte-deterministic.
    """
    handler = StderrHandler()
    handler.setFormatter(JsonFormatter())

    root = logging.getLogger()
    root.handlers = [handler]
    root.setLevel(level)

    return logging.getLogger(module_name)


def get_logger(module_name: str) -> logging.Logger:
    return logging.getLogger(module_name)


def pair_context(
    lie_type: str,
    lam: Optional[Iterable[int]] = None,
    mu: Optional[Iterable[int]] = None,
    **fields: Any,
) -> Dict[str, Dict[str, Any]]:
    """Builds the ``extra`` mapping for a record about one (lambda, mu) pair.

    >>> pair_context("C2", (1, 1), (1, 0), summands=5)
    {'context': {'type': 'C2', 'lambda': [1, 1], 'mu': [1, 0], 'summands': 5}}
    """
    context: Dict[str, Any] = {"type": lie_type}
    if lam is not None:
        context["lambda"] = list(lam)
    if mu is not None:
        context["mu"] = list(mu)
    context.update(fields)
    return {"context": context}
