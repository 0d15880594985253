"""
Tests for logging setup and the progress bar.
"""
import io
import json
import logging

from ufgdepth.utils.logging import setup_logger
from ufgdepth.utils.progress import ProgressBar, counting_callback


def test_json_lines_logging():
    """Test that records are JSON objects carrying their extra fields."""
    stream = io.StringIO()
    logger = setup_logger("ufgdepth.test_utils", logging.DEBUG, stream)
    setup_logger("ufgdepth.test_utils", logging.DEBUG, stream)
    assert len(logger.handlers) == 1

    logging.getLogger("ufgdepth.test_utils").info("Counted premises", extra={"j": 2, "b_j": "6"})
    record = json.loads(stream.getvalue().strip())
    assert record["level"] == "INFO"
    assert record["event"] == "Counted premises"
    assert record["j"] == 2
    assert record["b_j"] == "6"

    logger.removeHandler(logger.handlers[0])


def test_progress_bar():
    """Test progress output and the callback taking the total from the counting loop."""
    stream = io.StringIO()
    bar = ProgressBar(10, width=10, stream=stream)
    bar.draw(5)
    assert stream.getvalue().endswith("[#####-----] 50% 5/10 blocks")

    callback = counting_callback(bar)
    callback(1, 4)
    assert bar.total == 4
    assert stream.getvalue().endswith("[##--------] 25% 1/4 blocks")

    bar.close()
    assert stream.getvalue().endswith("100% 4/4 blocks\n")
