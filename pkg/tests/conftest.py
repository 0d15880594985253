"""
Shared fixtures.
"""

from pathlib import Path

import numpy as np
import pytest

from ufgdepth.context import FormalContext

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def table_path() -> Path:
    return FIXTURES / "table_6x5.csv"


@pytest.fixture
def mixed_path() -> Path:
    return FIXTURES / "mixed_excerpt.csv"


@pytest.fixture
def catalog_path() -> Path:
    return FIXTURES / "catalog_l2k3.txt"


@pytest.fixture
def hier_path() -> Path:
    return FIXTURES / "hier_sample.csv"


@pytest.fixture
def raster_path() -> Path:
    return FIXTURES / "raster.csv"


@pytest.fixture
def vegetation_context() -> FormalContext:
    """Nominal scaling of three observations over six vegetation categories."""
    return FormalContext.from_rows(
        ["g1", "g2", "g3"],
        ["tran.", "sec.", "prim.", "grass.", "colo.", "dist."],
        [
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0],
        ],
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)
