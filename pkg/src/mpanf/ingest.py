"""CSV ingestion and calendar alignment of a target/exogenous series pair.

The target series defines the experiment calendar.  The exogenous series is
projected onto that calendar: dates the target does not trade are dropped,
and target dates the exogenous series is missing are imputed with the most
recent prior exogenous value (forward fill).  Both series are then truncated
to the most recent ``length`` observations.
"""

from __future__ import annotations

import csv
import logging
import os
from dataclasses import dataclass
from datetime import datetime

import numpy as np

from .errors import (
    CsvParseError,
    DuplicateDateError,
    NoPriorExogenousValueError,
    SeriesTooShortError,
)
from .series import TimeSeries

logger = logging.getLogger(__name__)

DATE_FORMAT = "%Y-%m-%d"


@dataclass(frozen=True)
class RawSeries:
    """One parsed CSV column: named, dated values with no duplicate dates.

    Unlike :class:`~mpanf.series.TimeSeries`, a raw series carries a name and
    may still have calendar gaps relative to another series; alignment
    resolves those.
    """

    name: str
    dates: np.ndarray
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class AlignedPair:
    """Target and exogenous series on one identical calendar.

    ``dropped_exo_rows`` counts exogenous observations on dates the target
    never traded; ``filled_target_rows`` counts target dates whose exogenous
    value was forward-filled.  Both are diagnostics for the ingestion log.
    """

    target: TimeSeries
    exogenous: TimeSeries
    dropped_exo_rows: int = 0
    filled_target_rows: int = 0

    def __post_init__(self):
        if not np.array_equal(self.target.dates, self.exogenous.dates):
            raise ValueError("aligned pair must share an identical date vector")

    def __len__(self) -> int:
        return len(self.target)


def load_csv(
    path: str | os.PathLike,
    *,
    value_column: str,
    date_column: str = "Date",
    name: str | None = None,
) -> RawSeries:
    """Parse one CSV file into a RawSeries sorted ascending by date.

    Expects a header row, ISO-8601 dates (YYYY-MM-DD), and decimal values.
    Row numbers in parse errors are 1-based file line numbers (header = 1).
    """
    if name is None:
        name = os.path.splitext(os.path.basename(os.fspath(path)))[0]
    dates: list[np.datetime64] = []
    values: list[float] = []
    with open(path, newline="") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        for column in (date_column, value_column):
            if column not in header:
                raise CsvParseError(
                    path, row=1, reason=f"missing column {column!r} (found {header})"
                )
        for row in reader:
            line = reader.line_num
            raw_date = (row.get(date_column) or "").strip()
            raw_value = (row.get(value_column) or "").strip()
            try:
                parsed = datetime.strptime(raw_date, DATE_FORMAT)
            except ValueError:
                raise CsvParseError(
                    path, row=line, reason=f"bad date {raw_date!r}; expected YYYY-MM-DD"
                ) from None
            try:
                value = float(raw_value)
            except ValueError:
                raise CsvParseError(
                    path, row=line, reason=f"bad value {raw_value!r} in column {value_column!r}"
                ) from None
            if not np.isfinite(value):
                raise CsvParseError(
                    path, row=line, reason=f"non-finite value {raw_value!r}"
                )
            dates.append(np.datetime64(parsed.date(), "D"))
            values.append(value)
    if not dates:
        raise CsvParseError(path, row=1, reason="no data rows")
    date_arr = np.array(dates, dtype="datetime64[D]")
    value_arr = np.array(values, dtype=np.float64)
    order = np.argsort(date_arr, kind="stable")
    date_arr, value_arr = date_arr[order], value_arr[order]
    dup = np.nonzero(np.diff(date_arr) == np.timedelta64(0, "D"))[0]
    if dup.size:
        raise DuplicateDateError(f"duplicate date {date_arr[dup[0]]} in {path}")
    logger.debug("loaded %s: %d rows from %s", name, len(value_arr), path)
    return RawSeries(name=name, dates=date_arr, values=value_arr)


def align(target: RawSeries, exogenous: RawSeries) -> AlignedPair:
    """Project the exogenous series onto the target calendar.

    Exogenous observations on non-target dates are dropped; target dates
    missing from the exogenous calendar take the most recent prior exogenous
    value.  Raises NoPriorExogenousValue if the exogenous series starts after
    the target does (nothing to fill the first date with).
    """
    t_dates = np.asarray(target.dates, dtype="datetime64[D]")
    t_values = np.asarray(target.values, dtype=np.float64)
    e_dates = np.asarray(exogenous.dates, dtype="datetime64[D]")
    e_values = np.asarray(exogenous.values, dtype=np.float64)
    t_order = np.argsort(t_dates, kind="stable")
    e_order = np.argsort(e_dates, kind="stable")
    t_dates, t_values = t_dates[t_order], t_values[t_order]
    e_dates, e_values = e_dates[e_order], e_values[e_order]
    # Index of the latest exogenous observation dated on or before each
    # target date; -1 means no prior observation exists.
    idx = np.searchsorted(e_dates, t_dates, side="right") - 1
    if (idx < 0).any():
        first = t_dates[int(np.argmin(idx))]
        raise NoPriorExogenousValueError(
            f"no exogenous observation on or before first target date {first}"
        )
    filled = int(np.sum(~np.isin(t_dates, e_dates)))
    dropped = int(np.sum(~np.isin(e_dates, t_dates)))
    if filled or dropped:
        logger.info(
            "aligning onto %d target dates: dropped %d extra exogenous rows, "
            "forward-filled %d target dates",
            len(t_dates),
            dropped,
            filled,
        )
    return AlignedPair(
        target=TimeSeries(t_dates, t_values),
        exogenous=TimeSeries(t_dates, e_values[idx]),
        dropped_exo_rows=dropped,
        filled_target_rows=filled,
    )


def truncate_tail(pair: AlignedPair, length: int) -> AlignedPair:
    """Keep the most recent ``length`` observations of both series."""
    n = len(pair)
    if n < length:
        raise SeriesTooShortError(
            f"aligned pair has {n} observations, fewer than required {length}"
        )
    if n == length:
        return pair
    return AlignedPair(
        target=TimeSeries(pair.target.dates[-length:], pair.target.values[-length:]),
        exogenous=TimeSeries(pair.exogenous.dates[-length:], pair.exogenous.values[-length:]),
        dropped_exo_rows=pair.dropped_exo_rows,
        filled_target_rows=pair.filled_target_rows,
    )
