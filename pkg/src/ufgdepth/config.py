"""
Run configuration for the command-line interface.

Values come from, in decreasing priority: command-line flags, UFG_*
environment variables, the config file given with --config, defaults.
The config file is a flat YAML mapping whose keys are the kebab-case flag
names, e.g.

    kind: hier
    catalog: isco08.txt
    weights: "1,1"
    workers: 4
"""

import logging
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import yaml

from .closures import GROUND_MODES
from .context import DEFAULT_ENUMERATE_LIMIT, DEFAULT_VC_LIMIT
from .depth import Weights
from .engine import DEFAULT_MAX_N
from .errors import ConfigurationError
from .processing.grid import GridSpec
from .processing.ingest import KINDS

logger = logging.getLogger(__name__)

QUERY_SOURCES = ("sample", "file", "grid")


def parse_weights(text: Optional[Union[str, list, tuple]]) -> Weights:
    """C_1..C_k from "1,1/2,2" (or a YAML list); empty means all ones."""
    if text is None or text == "":
        return Weights()
    items = text if isinstance(text, (list, tuple)) else str(text).split(",")
    try:
        return Weights.from_list([str(v).strip() for v in items])
    except ConfigurationError:
        raise
    except Exception:
        raise ConfigurationError(f"Weights must be positive decimals or fractions; got {text!r}") from None


@dataclass(frozen=True)
class RunConfig:
    """Everything one command needs; built from the merged flag values."""

    input: Path
    kind: str
    output_dir: Path = Path(".")
    weights: Weights = field(default_factory=Weights)
    j_max: Optional[int] = None
    query_source: str = "sample"
    queries: Optional[Path] = None
    grid: Optional[GridSpec] = None
    raster: Optional[Path] = None
    vegetation: Optional[str] = None
    elevation: Optional[str] = None
    categories: Tuple[str, ...] = ()
    catalog: Optional[Path] = None
    ground_mode: str = "catalog"
    duplicates_allowed: bool = True
    workers: int = 1
    max_n: int = DEFAULT_MAX_N
    premise_cap: Optional[int] = None
    enumerate_limit: int = DEFAULT_ENUMERATE_LIMIT
    vc_limit: int = DEFAULT_VC_LIMIT

    def validate(self) -> "RunConfig":
        """
        Check field combinations.

        Raises:
            ConfigurationError: On the first invalid setting
        """
        if self.kind not in KINDS:
            raise ConfigurationError(f"Unknown data kind {self.kind!r}", {"allowed": list(KINDS)})
        if self.query_source not in QUERY_SOURCES:
            raise ConfigurationError(f"Unknown query source {self.query_source!r}", {"allowed": list(QUERY_SOURCES)})
        if self.query_source == "file" and self.queries is None:
            raise ConfigurationError("Query source 'file' needs --queries")
        if self.query_source == "grid" and self.grid is None:
            raise ConfigurationError("Query source 'grid' needs --grid xmin,xmax,ymin,ymax,nx,ny")
        if self.kind == "hier" and self.catalog is None:
            raise ConfigurationError("Hierarchical data needs a code catalog (--catalog)")
        if self.ground_mode not in GROUND_MODES:
            raise ConfigurationError(f"Unknown ground mode {self.ground_mode!r}", {"allowed": list(GROUND_MODES)})
        if self.j_max is not None and self.j_max < 1:
            raise ConfigurationError("j-max must be at least 1", {"j_max": self.j_max})
        for name in ("workers", "max_n", "enumerate_limit", "vc_limit"):
            if getattr(self, name) < 1:
                raise ConfigurationError(f"{name.replace('_', '-')} must be positive", {name: getattr(self, name)})
        if self.premise_cap is not None and self.premise_cap < 1:
            raise ConfigurationError("premise-cap must be positive", {"premise_cap": self.premise_cap})
        return self


CONFIG_KEYS = frozenset(f.name.replace("_", "-") for f in fields(RunConfig)) | {"progress"}


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a flat YAML mapping of kebab-case keys.

    Returns:
        Mapping with underscore keys, ready for click's default_map

    Raises:
        ConfigurationError: If the file is missing, not a flat mapping or has unknown keys
    """
    path = Path(path)
    if not path.exists():
        raise ConfigurationError(f"Config file not found: {path}", {"path": str(path)})
    try:
        with open(path, encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Config file is not valid YAML: {e}", {"path": str(path)}) from None

    if not isinstance(data, dict):
        raise ConfigurationError("Config file must be a flat key-value mapping", {"path": str(path)})
    unknown = sorted(str(k) for k in data if str(k) not in CONFIG_KEYS)
    if unknown:
        raise ConfigurationError(f"Unknown config keys: {', '.join(unknown)}", {"keys": unknown})
    nested = [str(k) for k, v in data.items() if isinstance(v, dict)]
    if nested:
        raise ConfigurationError(f"Config values must be scalars or lists: {', '.join(nested)}", {"keys": nested})

    logger.debug("Loaded config file", extra={"path": str(path), "keys": sorted(data)})
    return {str(k).replace("-", "_"): v for k, v in data.items()}
