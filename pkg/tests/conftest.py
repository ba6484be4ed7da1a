"""Shared helpers: small synthetic CSV datasets and config files."""

import numpy as np
import pytest


def write_series_csv(path, dates, values, column="Close"):
    with open(path, "w") as handle:
        handle.write(f"Date,{column}\n")
        for date, value in zip(dates, values):
            handle.write(f"{date},{float(value)!r}\n")
    return path


def weekday_dates(start, count):
    """First ``count`` weekdays from ``start`` (ISO date string)."""
    out = []
    day = np.datetime64(start, "D")
    while len(out) < count:
        if np.is_busday(day):
            out.append(day)
        day += np.timedelta64(1, "D")
    return np.array(out, dtype="datetime64[D]")


@pytest.fixture
def small_dataset(tmp_path):
    """Two random-walk targets plus one exogenous series and a config file."""
    rng = np.random.default_rng(1234)
    n = 60
    dates = weekday_dates("2022-01-03", n)
    exo = 7000 + np.cumsum(rng.normal(scale=25.0, size=n))
    write_series_csv(tmp_path / "exo.csv", dates, exo, column="Open")
    for name in ("alpha", "beta"):
        values = 100 + np.cumsum(rng.normal(scale=1.0, size=n))
        write_series_csv(tmp_path / f"{name}.csv", dates, values)
    config = tmp_path / "exp.cfg"
    config.write_text(
        "# small synthetic experiment\n"
        "exogenous = exo, exo.csv, Open\n"
        "target = alpha, alpha.csv, Close\n"
        "target = beta, beta.csv, Close\n"
        "truncate_length = 50\n"
        "split_fraction = 0.5\n"
        "output_dir = out\n"
        "seed = 0\n"
    )
    return config
