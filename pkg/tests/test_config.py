"""Tests for config parsing, defaults, and CLI-style overrides."""

import os

import pytest

from mpanf.config import (
    ConfigError,
    ExperimentConfig,
    SeriesSpec,
    apply_overrides,
    load_config,
    parse_config_text,
)

FULL = """
# comment line
exogenous = ftse, data/ftse.csv, Open
target = aapl, data/aapl.csv, Close
target = ba, data/ba.csv, Close

truncate_length = 2000
split_fraction = 0.4
methods = naive, mpanf
output_dir = results
seed = 7
"""


class TestParsing:
    def test_full_file(self):
        config = parse_config_text(FULL, base_dir="/base")
        assert [s.name for s in config.series_specs] == ["aapl", "ba"]
        assert config.exogenous_spec == SeriesSpec(
            "ftse", os.path.join("/base", "data/ftse.csv"), "Open"
        )
        assert config.series_specs[0].path == os.path.join("/base", "data/aapl.csv")
        assert config.truncate_length == 2000
        assert config.split_fraction == 0.4
        assert config.methods == ("naive", "mpanf")
        assert config.output_dir == os.path.join("/base", "results")
        assert config.seed == 7

    def test_defaults(self):
        config = parse_config_text(
            "exogenous = e, e.csv, Open\ntarget = t, t.csv, Close\n"
        )
        assert config.truncate_length == 2500
        assert config.split_fraction == 0.5
        assert config.methods == ("naive", "drift", "ima11", "linreg", "mpanf")
        assert config.seed == 0

    def test_absolute_paths_kept(self):
        config = parse_config_text(
            "exogenous = e, /abs/e.csv, Open\ntarget = t, /abs/t.csv, Close\n",
            base_dir="/elsewhere",
        )
        assert config.exogenous_spec.path == "/abs/e.csv"

    def test_load_config_resolves_against_file(self, tmp_path):
        sub = tmp_path / "cfgdir"
        sub.mkdir()
        cfg = sub / "exp.cfg"
        cfg.write_text("exogenous = e, e.csv, Open\ntarget = t, t.csv, Close\n")
        config = load_config(cfg)
        assert config.exogenous_spec.path == str(sub / "e.csv")


class TestParseErrors:
    def test_missing_exogenous(self):
        with pytest.raises(ConfigError, match="exogenous"):
            parse_config_text("target = t, t.csv, Close\n")

    def test_missing_target(self):
        with pytest.raises(ConfigError, match="target"):
            parse_config_text("exogenous = e, e.csv, Open\n")

    def test_unknown_key(self):
        with pytest.raises(ConfigError, match="unknown key"):
            parse_config_text("frequency = daily\n")

    def test_missing_equals(self):
        with pytest.raises(ConfigError, match="line 1"):
            parse_config_text("just words\n")

    def test_bad_triple(self):
        with pytest.raises(ConfigError, match="name, csv_path, value_column"):
            parse_config_text("exogenous = e, e.csv\n")

    def test_duplicate_scalar_key(self):
        text = (
            "exogenous = e, e.csv, Open\ntarget = t, t.csv, Close\n"
            "seed = 1\nseed = 2\n"
        )
        with pytest.raises(ConfigError, match="twice"):
            parse_config_text(text)

    def test_bad_numeric(self):
        text = (
            "exogenous = e, e.csv, Open\ntarget = t, t.csv, Close\n"
            "truncate_length = soon\n"
        )
        with pytest.raises(ConfigError, match="bad numeric"):
            parse_config_text(text)

    def test_unknown_method(self):
        text = (
            "exogenous = e, e.csv, Open\ntarget = t, t.csv, Close\n"
            "methods = naive, prophet\n"
        )
        with pytest.raises(ConfigError, match="prophet"):
            parse_config_text(text)

    def test_duplicate_series_names(self):
        text = (
            "exogenous = e, e.csv, Open\n"
            "target = t, a.csv, Close\ntarget = t, b.csv, Close\n"
        )
        with pytest.raises(ConfigError, match="duplicate"):
            parse_config_text(text)

    def test_bad_split_fraction(self):
        text = (
            "exogenous = e, e.csv, Open\ntarget = t, t.csv, Close\n"
            "split_fraction = 1.0\n"
        )
        with pytest.raises(ConfigError, match="split_fraction"):
            parse_config_text(text)


class TestOverrides:
    def base(self):
        return parse_config_text(
            "exogenous = e, e.csv, Open\ntarget = t, t.csv, Close\n"
        )

    def test_no_overrides_returns_same_object(self):
        config = self.base()
        assert apply_overrides(config) is config

    def test_field_replacement(self):
        config = apply_overrides(
            self.base(),
            output_dir="/other",
            methods=("naive",),
            seed=99,
            truncate_length=100,
            split_fraction=0.25,
        )
        assert config.output_dir == "/other"
        assert config.methods == ("naive",)
        assert config.seed == 99
        assert config.truncate_length == 100
        assert config.split_fraction == 0.25

    def test_override_validation_still_applies(self):
        with pytest.raises(ConfigError):
            apply_overrides(self.base(), methods=("nope",))


def test_config_requires_methods_nonempty():
    with pytest.raises(ConfigError):
        ExperimentConfig(
            series_specs=(SeriesSpec("t", "t.csv", "Close"),),
            exogenous_spec=SeriesSpec("e", "e.csv", "Open"),
            methods=(),
        )
