"""
Progress display for premise counting, drawn on standard error so that
standard output only names the files written.
"""

import sys
from typing import Callable, Optional, TextIO


class ProgressBar:
    """Share of first-object blocks counted so far."""

    def __init__(self, total: int, label: str = "Counting premises", width: int = 30, stream: Optional[TextIO] = None):
        self.total = max(1, total)
        self.label = label
        self.width = width
        self.done = 0
        self.stream = stream or sys.stderr

    def draw(self, done: int) -> None:
        self.done = min(max(0, done), self.total)
        filled = self.width * self.done // self.total
        percent = 100 * self.done // self.total
        self.stream.write(
            f"\r{self.label} [{'#' * filled}{'-' * (self.width - filled)}] {percent}% {self.done}/{self.total} blocks"
        )
        self.stream.flush()

    def close(self) -> None:
        self.draw(self.total)
        self.stream.write("\n")
        self.stream.flush()


def counting_callback(bar: ProgressBar) -> Callable[[int, int], None]:
    """
    Adapter for count_tuples' progress_callback.

    The number of blocks is the number of distinct objects, known only
    after aggregation, so every call resets the total.
    """
    def callback(done: int, total: int) -> None:
        bar.total = max(1, total)
        bar.draw(done)

    return callback
