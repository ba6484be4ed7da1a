"""Experiment configuration: a flat key-value file with list support.

Format, one assignment per line::

    # comment
    exogenous = ftse, data/ftse.csv, Open
    target = aapl, data/aapl.csv, Close
    target = ba, data/ba.csv, Close
    truncate_length = 2500
    split_fraction = 0.5
    methods = naive, drift, ima11, linreg, mpanf
    output_dir = out
    seed = 0

``target`` may repeat (one line per series); both ``target`` and
``exogenous`` take ``name, csv_path, value_column`` triples.  Relative paths
are resolved against the config file's directory.  Every field can be
overridden from the command line.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .forecasters import METHODS

DEFAULT_TRUNCATE_LENGTH = 2500
DEFAULT_SPLIT_FRACTION = 0.5
DEFAULT_METHODS = ("naive", "drift", "ima11", "linreg", "mpanf")


class ConfigError(ValueError):
    """The configuration file or overrides are invalid."""


@dataclass(frozen=True)
class SeriesSpec:
    """One CSV column to load: series name, file path, value column."""

    name: str
    path: str
    value_column: str


@dataclass(frozen=True)
class ExperimentConfig:
    series_specs: tuple[SeriesSpec, ...]
    exogenous_spec: SeriesSpec
    truncate_length: int = DEFAULT_TRUNCATE_LENGTH
    split_fraction: float = DEFAULT_SPLIT_FRACTION
    methods: tuple[str, ...] = DEFAULT_METHODS
    output_dir: str = "out"
    seed: int = 0

    def __post_init__(self):
        if not self.series_specs:
            raise ConfigError("at least one target series is required")
        if not self.methods:
            raise ConfigError("at least one method is required")
        unknown = [m for m in self.methods if m not in METHODS]
        if unknown:
            raise ConfigError(
                f"unknown methods {unknown}; available: {sorted(METHODS)}"
            )
        names = [spec.name for spec in self.series_specs]
        if len(set(names)) != len(names):
            raise ConfigError(f"duplicate target series names in {names}")
        if self.truncate_length < 4:
            raise ConfigError("truncate_length must be at least 4")
        if not 0.0 < self.split_fraction < 1.0:
            raise ConfigError("split_fraction must lie strictly between 0 and 1")


def _parse_spec(value: str, key: str, base_dir: str) -> SeriesSpec:
    parts = [p.strip() for p in value.split(",")]
    if len(parts) != 3 or not all(parts):
        raise ConfigError(
            f"{key} must be 'name, csv_path, value_column', got {value!r}"
        )
    name, path, column = parts
    if not os.path.isabs(path):
        path = os.path.join(base_dir, path)
    return SeriesSpec(name=name, path=path, value_column=column)


def parse_config_text(text: str, base_dir: str = ".") -> ExperimentConfig:
    """Parse config file contents; see the module docstring for the format."""
    targets: list[SeriesSpec] = []
    exogenous: SeriesSpec | None = None
    scalars: dict[str, str] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key == "target":
            targets.append(_parse_spec(value, key, base_dir))
        elif key == "exogenous":
            if exogenous is not None:
                raise ConfigError(f"line {lineno}: exogenous specified twice")
            exogenous = _parse_spec(value, key, base_dir)
        elif key in ("truncate_length", "split_fraction", "methods", "output_dir", "seed"):
            if key in scalars:
                raise ConfigError(f"line {lineno}: {key} specified twice")
            scalars[key] = value
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    if exogenous is None:
        raise ConfigError("config must specify an exogenous series")
    kwargs: dict = {"series_specs": tuple(targets), "exogenous_spec": exogenous}
    try:
        if "truncate_length" in scalars:
            kwargs["truncate_length"] = int(scalars["truncate_length"])
        if "split_fraction" in scalars:
            kwargs["split_fraction"] = float(scalars["split_fraction"])
        if "seed" in scalars:
            kwargs["seed"] = int(scalars["seed"])
    except ValueError as err:
        raise ConfigError(f"bad numeric value: {err}") from None
    if "methods" in scalars:
        kwargs["methods"] = tuple(
            m.strip() for m in scalars["methods"].split(",") if m.strip()
        )
    if "output_dir" in scalars:
        path = scalars["output_dir"]
        if not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        kwargs["output_dir"] = path
    return ExperimentConfig(**kwargs)


def load_config(path: str | os.PathLike) -> ExperimentConfig:
    """Read and parse a config file; relative paths resolve against it."""
    with open(path) as handle:
        text = handle.read()
    return parse_config_text(text, base_dir=os.path.dirname(os.path.abspath(path)))


def apply_overrides(
    config: ExperimentConfig,
    *,
    output_dir: str | None = None,
    methods: tuple[str, ...] | None = None,
    seed: int | None = None,
    truncate_length: int | None = None,
    split_fraction: float | None = None,
) -> ExperimentConfig:
    """Return a copy of ``config`` with any provided fields replaced."""
    changes: dict = {}
    if output_dir is not None:
        changes["output_dir"] = output_dir
    if methods is not None:
        changes["methods"] = tuple(methods)
    if seed is not None:
        changes["seed"] = seed
    if truncate_length is not None:
        changes["truncate_length"] = truncate_length
    if split_fraction is not None:
        changes["split_fraction"] = split_fraction
    return replace(config, **changes) if changes else config
