"""
Hierarchical code catalogs (fixed-length digit codes forming a prefix tree).
"""

import bisect
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, Iterable, List, Tuple, Union

from ..errors import InputError, IngestError
from ..processing.data_validator import ValidationError

logger = logging.getLogger(__name__)


def common_prefix(codes: Iterable[str]) -> str:
    """Longest common prefix of the given codes ('' if they differ at the first digit)."""
    codes = list(codes)
    if not codes:
        return ""
    lo, hi = min(codes), max(codes)
    i = 0
    while i < len(lo) and lo[i] == hi[i]:
        i += 1
    return lo[:i]


@dataclass(frozen=True)
class CodeCatalog:
    """Sorted set of digit codes, all of length `levels`."""

    codes: Tuple[str, ...]
    levels: int
    _code_set: FrozenSet[str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        codes = tuple(sorted(set(self.codes)))
        if self.levels < 1:
            raise InputError("Catalog needs at least one level", {"levels": self.levels})
        if not codes:
            raise InputError("Catalog is empty")
        for code in codes:
            if not code.isdigit() or len(code) != self.levels:
                raise InputError(
                    f"Catalog code {code!r} is not a {self.levels}-digit code",
                    {"code": code, "levels": self.levels},
                )
        object.__setattr__(self, "codes", codes)
        object.__setattr__(self, "_code_set", frozenset(codes))

    @classmethod
    def from_codes(cls, codes: Iterable[str]) -> "CodeCatalog":
        """Build a catalog; the level count is taken from the codes."""
        codes = [str(c) for c in codes]
        if not codes:
            raise InputError("Catalog is empty")
        return cls(tuple(codes), len(codes[0]))

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "CodeCatalog":
        """
        Read one code per line; '#' starts a comment, blank lines are skipped.

        Raises:
            IngestError: If a line is not a digit code or lengths differ
        """
        path = Path(path)
        if not path.exists():
            raise InputError(f"Catalog file not found: {path}", {"path": str(path)})

        codes: List[str] = []
        errors: List[ValidationError] = []
        levels = None
        with open(path, encoding="utf-8") as fh:
            for line_number, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if not line.isdigit():
                    errors.append(ValidationError("catalog_code", f"Invalid catalog code {line!r}", "code", [line_number]))
                    continue
                if levels is None:
                    levels = len(line)
                elif len(line) != levels:
                    errors.append(
                        ValidationError(
                            "catalog_code",
                            f"Catalog code {line!r} has {len(line)} digits, expected {levels}",
                            "code",
                            [line_number],
                        )
                    )
                    continue
                codes.append(line)

        if errors:
            raise IngestError(f"Catalog {path.name} has {len(errors)} invalid line(s)", errors)
        if not codes:
            raise InputError(f"Catalog {path.name} contains no codes", {"path": str(path)})

        logger.info("Loaded code catalog", extra={"codes": len(codes), "levels": levels})
        return cls(tuple(codes), levels)

    def __contains__(self, code: object) -> bool:
        return code in self._code_set

    def __len__(self) -> int:
        return len(self.codes)


def codes_with_prefix(sorted_codes: Tuple[str, ...], prefix: str) -> Tuple[str, ...]:
    """Slice of a sorted code tuple whose entries start with the prefix."""
    if not prefix:
        return sorted_codes
    start = bisect.bisect_left(sorted_codes, prefix)
    stop = bisect.bisect_left(sorted_codes, prefix + "\x7f")
    return sorted_codes[start:stop]
