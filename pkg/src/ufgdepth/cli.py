"""
Command-line interface for ufg-depth.

Results go to files in --output-dir; standard output only names the files
written. Diagnostics (log records and the error object of a failed run) go
to standard error as JSON lines.
"""

import dataclasses
import functools
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import click

from . import __version__
from .closures import FiniteContextClosure
from .config import RunConfig, load_config_file, parse_weights
from .context import enumerate_extent_masks, intent_mask
from .depth import (
    DepthResult,
    finest_mode,
    generalized_tukey,
    premise_counts,
    depth_from_counts,
    topdown_median,
    ufg_depth,
)
from .errors import ConfigurationError, UfgError
from .export import (
    error_payload,
    write_compare_json,
    write_depths_csv,
    write_extents_csv,
    write_grid_csv,
    write_premises_csv,
    write_summary_json,
    write_tukey_csv,
)
from .processing.grid import GridSpec, Raster, grid_covariates, grid_queries
from .processing.ingest import KINDS, IngestedData, ingest, load_queries
from .utils.logging import setup_logger
from .utils.progress import ProgressBar, counting_callback

logger = logging.getLogger(__name__)

LOG_LEVELS = ("debug", "info", "warning", "error")


def _emit_error(error: Exception) -> None:
    click.echo(json.dumps(error_payload(error), default=str), err=True)


def reports_errors(func):
    """Turn failures into the error JSON object and a nonzero exit code."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise
        except UfgError as e:
            logger.debug("Command failed", extra={"code": e.code})
            _emit_error(e)
            sys.exit(2)
        except Exception as e:
            logger.exception("Unexpected failure")
            _emit_error(e)
            sys.exit(1)
    return wrapper


def _flatten_defaults(values: Dict[str, Any]) -> Dict[str, Any]:
    # list values from YAML become the comma-separated flag syntax
    flat = {k: ",".join(str(x) for x in v) if isinstance(v, list) else v for k, v in values.items()}
    if "input" in flat:
        flat["input_path"] = flat.pop("input")
    return flat


@click.group(context_settings={"auto_envvar_prefix": "UFG", "help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__)
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="Flat YAML file of flag defaults")
@click.option("--log-level", type=click.Choice(LOG_LEVELS), default="info", show_default=True)
@click.pass_context
def cli(ctx, config_path, log_level):
    """ufg depth for formal contexts, mixed spatial data and hierarchical codes."""
    setup_logger("ufgdepth", getattr(logging, log_level.upper()))
    if config_path:
        try:
            defaults = _flatten_defaults(load_config_file(config_path))
        except UfgError as e:
            _emit_error(e)
            sys.exit(2)
        ctx.default_map = {name: dict(defaults) for name in cli.commands}


def data_options(func):
    """Options shared by every command: input, kind and ground-space settings."""
    options = [
        click.argument("input_path", metavar="INPUT", type=click.Path(dir_okay=False)),
        click.option("--kind", type=click.Choice(KINDS), required=True, help="Input data kind"),
        click.option("--output-dir", type=click.Path(file_okay=False), default=".", show_default=True),
        click.option("--catalog", type=click.Path(dir_okay=False), help="Code catalog (hier)"),
        click.option("--categories", help="Comma-separated vegetation categories (mixed; default: from data)"),
        click.option("--ground-mode", type=click.Choice(["catalog", "sample"]), default="catalog", show_default=True),
        click.option("--duplicates-allowed/--no-duplicates-allowed", default=True, show_default=True,
                     help="Hierarchical codes stand for repeatable objects"),
        click.option("--premise-cap", type=int, help="Premise cap for contexts too large for the VC bound"),
        click.option("--enumerate-limit", type=int, default=24, show_default=True),
        click.option("--vc-limit", type=int, default=20, show_default=True),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def depth_options(func):
    """Options of commands that count premises."""
    options = [
        click.option("--weights", help="C_1,C_2,... (unlisted ones are 1)"),
        click.option("--j-max", type=int, help="Largest premise cardinality"),
        click.option("--workers", type=int, default=1, show_default=True),
        click.option("--max-n", type=int, default=300, show_default=True, help="Object limit for j-max >= 4"),
        click.option("--progress/--no-progress", default=False, help="Progress bar on standard error"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _run_config(query_source: str = "sample", **kw) -> RunConfig:
    grid = kw.get("grid")
    return RunConfig(
        input=Path(kw["input_path"]),
        kind=kw["kind"],
        output_dir=Path(kw.get("output_dir") or "."),
        weights=parse_weights(kw.get("weights")),
        j_max=kw.get("j_max"),
        query_source=query_source,
        queries=Path(kw["queries"]) if kw.get("queries") else None,
        grid=GridSpec.parse(grid) if grid else None,
        raster=Path(kw["raster"]) if kw.get("raster") else None,
        vegetation=kw.get("vegetation"),
        elevation=kw.get("elevation"),
        categories=tuple(c.strip() for c in kw["categories"].split(",") if c.strip()) if kw.get("categories") else (),
        catalog=Path(kw["catalog"]) if kw.get("catalog") else None,
        ground_mode=kw.get("ground_mode") or "catalog",
        duplicates_allowed=kw.get("duplicates_allowed", True),
        workers=kw.get("workers") or 1,
        max_n=kw.get("max_n") or 300,
        premise_cap=kw.get("premise_cap"),
        enumerate_limit=kw.get("enumerate_limit") or 24,
        vc_limit=kw.get("vc_limit") or 20,
    ).validate()


def _load(cfg: RunConfig) -> IngestedData:
    data = ingest(
        cfg.input,
        cfg.kind,
        catalog=cfg.catalog,
        categories=cfg.categories or None,
        ground_mode=cfg.ground_mode,
        duplicates_allowed=cfg.duplicates_allowed,
        premise_cap=cfg.premise_cap,
    )
    if isinstance(data.desc, FiniteContextClosure):
        data.desc = dataclasses.replace(data.desc, enumerate_limit=cfg.enumerate_limit, vc_limit=cfg.vc_limit)
    return data


def _sample_queries(data: IngestedData) -> Tuple[List[str], List[Any]]:
    """Default queries: every observation, or every distinct code for hierarchical data."""
    if data.kind == "hier":
        codes = sorted({obs.element for obs in data.sample})
        return codes, codes
    return data.sample.ids, data.sample.elements


def _queries(cfg: RunConfig, data: IngestedData) -> Tuple[List[str], List[Any]]:
    if cfg.queries is not None:
        ids, elements = load_queries(cfg.queries, data)
    else:
        ids, elements = _sample_queries(data)
    if data.kind == "mixed":
        _warn_outside_elevation(data, ids, elements)
    return ids, elements


def _warn_outside_elevation(data: IngestedData, ids: List[str], elements: List[Any]) -> None:
    observed = [obs.element[2] for obs in data.sample if obs.weight > 0]
    lo, hi = min(observed), max(observed)
    outside = [qid for qid, e in zip(ids, elements) if not lo <= Fraction(e[2]) <= hi]
    if outside:
        logger.warning(
            "Queries outside the observed elevation range have depth 0",
            extra={"count": len(outside), "query_ids": outside[:10], "range": [str(lo), str(hi)]},
        )


def _depth(cfg: RunConfig, data: IngestedData, ids: List[str], elements: List[Any], progress: bool) -> DepthResult:
    bar = None
    callback = None
    if progress:
        bar = ProgressBar(len(data.sample))
        callback = counting_callback(bar)
    result = ufg_depth(
        data.sample, elements, data.desc,
        w=cfg.weights, j_max=cfg.j_max, query_ids=ids, workers=cfg.workers,
        max_n=cfg.max_n, cap=cfg.premise_cap, progress_callback=callback,
    )
    if bar is not None:
        bar.close()
    return result


def _summary_extra(cfg: RunConfig, data: IngestedData) -> Dict[str, Any]:
    return {"kind": cfg.kind, "input": cfg.input.name, "n_observations": len(data.sample)}


@cli.command()
@data_options
@depth_options
@click.option("--queries", type=click.Path(dir_okay=False), help="Query CSV in the input's schema (default: the sample)")
@reports_errors
def depth(**kw):
    """Depth of every query; writes depths.csv and summary.json."""
    cfg = _run_config("file" if kw.get("queries") else "sample", **kw)
    data = _load(cfg)
    ids, elements = _queries(cfg, data)
    result = _depth(cfg, data, ids, elements, kw["progress"])
    for path in (
        write_depths_csv(result, cfg.output_dir / "depths.csv"),
        write_summary_json(result, cfg.output_dir / "summary.json", _summary_extra(cfg, data)),
    ):
        click.echo(f"Wrote {path}")


@cli.command()
@data_options
@depth_options
@click.option("--grid", "grid", required=True, help="xmin,xmax,ymin,ymax,nx,ny")
@click.option("--raster", type=click.Path(dir_okay=False), help="CSV x,y,vegetation,elevation for mixed grids")
@click.option("--vegetation", help="Constant vegetation for every cell")
@click.option("--elevation", help="Constant elevation for every cell")
@reports_errors
def grid(**kw):
    """Depth over a regular grid; writes grid.csv for plotting."""
    cfg = _run_config("grid", **kw)
    if cfg.kind not in ("mixed", "spatial"):
        raise ConfigurationError(f"The grid command needs mixed or spatial data, not {cfg.kind!r}")
    data = _load(cfg)
    raster = Raster.from_file(cfg.raster) if cfg.raster else None
    ids, elements = grid_queries(cfg.grid, cfg.kind, raster, cfg.vegetation, cfg.elevation)
    elements = [data.desc.validate(e) for e in elements]
    if cfg.kind == "mixed":
        _warn_outside_elevation(data, ids, elements)
    result = _depth(cfg, data, ids, elements, kw["progress"])
    path = write_grid_csv(ids, elements, grid_covariates(elements), result, cfg.output_dir / "grid.csv")
    click.echo(f"Wrote {path}")


@cli.command()
@data_options
@depth_options
@reports_errors
def compare(**kw):
    """ufg median, finest mode, top-down median and Tukey depth of hierarchical codes."""
    cfg = _run_config(**kw)
    if cfg.kind != "hier":
        raise ConfigurationError(f"The compare command needs hierarchical data, not {cfg.kind!r}")
    data = _load(cfg)
    ids, elements = _sample_queries(data)
    result = _depth(cfg, data, ids, elements, kw["progress"])
    tukey = generalized_tukey(data.sample, elements, data.desc)
    path = write_compare_json(
        result, finest_mode(data.sample), topdown_median(data.sample), tukey, cfg.output_dir / "compare.json"
    )
    click.echo(f"Wrote {path}")


@cli.command()
@data_options
@depth_options
@reports_errors
def premises(**kw):
    """Premise weights b_j per cardinality and the detected J; writes premises.csv."""
    cfg = _run_config(**kw)
    data = _load(cfg)
    ids, elements = _sample_queries(data)
    counts = premise_counts(
        data.sample, elements, data.desc, j_max=cfg.j_max, workers=cfg.workers,
        max_n=cfg.max_n, cap=cfg.premise_cap,
    )
    result = depth_from_counts(counts, elements, cfg.weights, ids)
    path = write_premises_csv(result, cfg.output_dir / "premises.csv")
    click.echo(f"J = {{{', '.join(str(j) for j in sorted(result.J))}}}")
    click.echo(f"Wrote {path}")


@cli.command()
@data_options
@reports_errors
def extents(**kw):
    """All extents of a formal context with intent and sample mass; writes extents.csv."""
    cfg = _run_config(**kw)
    if cfg.kind != "table":
        raise ConfigurationError(f"The extents command needs a formal context (table), not {cfg.kind!r}")
    data = _load(cfg)
    ctx = data.context
    total = data.sample.total_weight
    weight_of = {obs.element: obs.weight for obs in data.sample}
    rows = []
    for mask in enumerate_extent_masks(ctx, cfg.enumerate_limit):
        members = ctx.sorted_objects(ctx.objects_of(mask))
        intent = [m for m in ctx.attributes if m in ctx.attributes_of(intent_mask(ctx, mask))]
        mass = sum((weight_of.get(g, Fraction(0)) for g in members), Fraction(0)) / total
        rows.append((members, intent, mass))
    path = write_extents_csv(rows, cfg.output_dir / "extents.csv")
    click.echo(f"Wrote {path}")


@cli.command()
@data_options
@click.option("--queries", type=click.Path(dir_okay=False), help="Query CSV in the input's schema (default: the sample)")
@reports_errors
def tukey(**kw):
    """Generalized Tukey depth (formal contexts and hierarchical codes); writes tukey.csv."""
    cfg = _run_config("file" if kw.get("queries") else "sample", **kw)
    data = _load(cfg)
    ids, elements = _queries(cfg, data)
    values = generalized_tukey(data.sample, elements, data.desc)
    path = write_tukey_csv(ids, [values[data.desc.validate(e)] for e in elements], cfg.output_dir / "tukey.csv")
    click.echo(f"Wrote {path}")


def main(argv: Optional[List[str]] = None) -> int:
    """Console entry point."""
    try:
        cli.main(args=argv, prog_name="ufg", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
