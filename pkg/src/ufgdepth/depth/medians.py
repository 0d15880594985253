"""
Comparison medians for hierarchical codes: finest-level mode and top-down median.
"""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List

from ..errors import InputError
from ..sample import Sample
from .hierarchical import code_weights


def _argmax(weights: Dict[str, Fraction]) -> List[str]:
    top = max(weights.values())
    return sorted(k for k, v in weights.items() if v == top)


def finest_mode(sample: Sample) -> List[str]:
    """Codes with the largest total weight; ties kept."""
    if not len(sample):
        raise InputError("empty sample")
    return _argmax(code_weights(sample))


def topdown_median(sample: Sample) -> List[str]:
    """
    Follow the modal class level by level down to full codes.

    Ties at any level branch; all codes reached are returned.
    """
    weights = code_weights(sample)
    levels = len(next(iter(weights)))
    branches = [""]
    for level in range(1, levels + 1):
        next_branches = []
        for prefix in branches:
            children: Dict[str, Fraction] = defaultdict(Fraction)
            for code, w in weights.items():
                if code.startswith(prefix):
                    children[code[:level]] += w
            next_branches.extend(_argmax(children))
        branches = next_branches
    return sorted(branches)
