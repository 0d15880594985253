"""
Brute-force reference implementations used to cross-check the main computations.

Nothing here reuses the geometry or counting code of the main path.
"""

from .config import ALL_FAMILIES, MAXIMAL_ONLY, OracleConfig
from .depth import MAX_OBSERVATIONS, depth_oracle
from .premises import premise_oracle
from .simplicial import SimplicialDepth, simplicial_depth_2d
from .witness import cover_witness_mc

__all__ = [
    "ALL_FAMILIES",
    "MAXIMAL_ONLY",
    "MAX_OBSERVATIONS",
    "OracleConfig",
    "SimplicialDepth",
    "cover_witness_mc",
    "depth_oracle",
    "premise_oracle",
    "simplicial_depth_2d",
]
