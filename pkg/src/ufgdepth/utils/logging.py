"""
Logging setup: one JSON object per line on standard error.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from typing import Optional, TextIO

# attributes every LogRecord carries; anything else came in through `extra`
_RESERVED = frozenset(vars(logging.LogRecord("", 0, "", 0, "", (), None))) | {"message", "asctime"}


class JsonLinesFormatter(logging.Formatter):
    """Formats a record as a JSON object including its `extra` fields."""

    def format(self, record: logging.LogRecord) -> str:
        payload = {
            "ts": datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "event": str(record.msg),
            "message": record.getMessage(),
        }
        for key, value in record.__dict__.items():
            if key not in _RESERVED and not key.startswith("_"):
                payload[key] = value
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload, default=str, sort_keys=False)


def setup_logger(name: str = "ufgdepth", level: int = logging.INFO, stream: Optional[TextIO] = None) -> logging.Logger:
    """
    Configure the package logger with a single JSON-lines handler.

    Calling it again replaces the handler instead of adding a second one.

    Args:
        name: Logger name
        level: Logging level
        stream: Destination (standard error by default)

    Returns:
        The configured logger
    """
    logger = logging.getLogger(name)
    for handler in list(logger.handlers):
        if getattr(handler, "_ufg_handler", False):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(JsonLinesFormatter())
    handler._ufg_handler = True
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger
