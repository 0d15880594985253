"""
Headline numbers on user-supplied datasets.

Set UFG_GORILLAS_PATH to the 2006 gorilla nest sites in the mixed schema
(id,x,y,vegetation,elevation), UFG_GGSS_PATH to the 2021 occupation codes
(id,code[,weight]) and UFG_ISCO_CATALOG_PATH to the ISCO-08 unit groups, then
run `pytest -m external_data`.
"""
import os
import time
from fractions import Fraction

import pytest

from ufgdepth.depth import (
    contour_prefixes,
    finest_mode,
    generalized_tukey,
    quasiconcave_hull,
    topdown_median,
    ufg_depth,
)
from ufgdepth.processing.ingest import ingest

pytestmark = pytest.mark.external_data


def _env_path(name):
    value = os.environ.get(name)
    if not value:
        pytest.skip(f"{name} is not set")
    return value


def _rounded(value: Fraction) -> float:
    return round(float(value), 3)


@pytest.fixture(scope="module")
def gorillas():
    return ingest(_env_path("UFG_GORILLAS_PATH"), "mixed")


@pytest.fixture(scope="module")
def ggss():
    data = ingest(_env_path("UFG_GGSS_PATH"), "hier", catalog=_env_path("UFG_ISCO_CATALOG_PATH"))
    codes = sorted({obs.element for obs in data.sample})
    return data, codes, ufg_depth(data.sample, codes, data.desc, query_ids=codes)


def test_gorilla_median(gorillas):
    """Test the unique median of the nest sites and the runtime on one worker."""
    start = time.perf_counter()
    result = ufg_depth(gorillas.sample, gorillas.sample.elements, gorillas.desc, j_max=4, query_ids=gorillas.sample.ids)
    assert time.perf_counter() - start < 120

    assert len(result.medians) == 1
    assert _rounded(result.maximum) == 0.765
    _, vegetation, elevation = next(row.element for row in result.rows if row.query_id == result.medians[0])
    assert vegetation.startswith("prim")
    assert elevation == 1805


def test_gorilla_workers(gorillas):
    """Test that two workers give the same depths."""
    one = ufg_depth(gorillas.sample, gorillas.sample.elements, gorillas.desc, j_max=4)
    two = ufg_depth(gorillas.sample, gorillas.sample.elements, gorillas.desc, j_max=4, workers=2)
    assert one.depths == two.depths


def test_occupation_depth(ggss):
    """Test median, minimum and number of distinct depth values."""
    data, codes, result = ggss
    assert result.J == frozenset({1, 2})
    assert result.medians == ["3221"]
    assert _rounded(result.maximum) == 0.927
    assert result.minimizers == ["6210"]
    assert _rounded(result.minimum) == 0.824
    assert result.distinct_values == 285


def test_occupation_contours(ggss):
    """Test that the quasiconcave hull has three contour prefixes."""
    data, codes, result = ggss
    hull = quasiconcave_hull(result.as_dict(), data.desc)
    assert contour_prefixes(hull, data.desc) == ["3221", "3", ""]


def test_occupation_central_tendency(ggss):
    """Test the finest mode, the top-down median and Tukey depth."""
    data, codes, _ = ggss
    assert finest_mode(data.sample) == ["4110"]
    assert topdown_median(data.sample) == ["3343"]
    tukey = generalized_tukey(data.sample, codes, data.desc)
    assert sorted({_rounded(v) for v in tukey.values()}) == [0.71, 0.747]
    assert all(_rounded(v) == 0.747 for code, v in tukey.items() if code.startswith("3"))
