"""Sample containers, file ingestion, and the basic statistics every
other module leans on.

All containers are frozen dataclasses wrapping read-only float64 arrays,
so they can be shared freely across threads. Randomness throughout the
package flows through :class:`RngSeed` into ``numpy.random.default_rng``
(PCG64 seeded via ``SeedSequence``), which is portable and documented:
the same seed yields the same stream on every platform.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from .errors import (
    EmptyInput,
    InvalidParams,
    NonFiniteValue,
    ParseError,
    ShortSample,
)

__all__ = [
    "RngSeed",
    "PairedSample",
    "MultiSample",
    "PanelValue",
    "CoefficientPanel",
    "load_paired",
    "save_paired",
    "read_columns",
    "sample_mean",
    "sample_median",
]


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.flags.writeable = False
    return a


def _check_finite(a: np.ndarray, what: str) -> None:
    if a.size and not np.all(np.isfinite(a)):
        row = int(np.flatnonzero(~np.isfinite(a))[0]) + 1
        raise NonFiniteValue(row, f"{what} contains a non-finite value")


@dataclass(frozen=True)
class RngSeed:
    """A 64-bit seed; identical seeds produce identical streams."""

    seed: int

    def __post_init__(self) -> None:
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise InvalidParams(f"seed must be an integer, got {self.seed!r}")
        if not 0 <= self.seed < 2**64:
            raise InvalidParams(f"seed must fit in 64 unsigned bits, got {self.seed}")

    def rng(self, *stream: int) -> np.random.Generator:
        """Generator for this seed, optionally forked by stream tags.

        ``RngSeed(s).rng(i)`` and ``RngSeed(s).rng(j)`` are independent
        deterministic streams for i != j, which is how per-iteration
        randomness stays reproducible regardless of execution order.
        """
        return np.random.default_rng([self.seed, *stream])


def as_seed(seed: "RngSeed | int") -> RngSeed:
    return seed if isinstance(seed, RngSeed) else RngSeed(seed)


@dataclass(frozen=True, eq=False)
class PairedSample:
    """n paired observations (x_i, y_i); the universal input.

    Invariants: equal lengths, n >= 2, every value finite.
    """

    xs: np.ndarray
    ys: np.ndarray

    def __post_init__(self) -> None:
        xs = np.atleast_1d(np.asarray(self.xs, dtype=np.float64))
        ys = np.atleast_1d(np.asarray(self.ys, dtype=np.float64))
        if xs.ndim != 1 or ys.ndim != 1:
            raise InvalidParams("xs and ys must be one-dimensional")
        if xs.shape[0] != ys.shape[0]:
            raise InvalidParams(
                f"length mismatch: {xs.shape[0]} xs vs {ys.shape[0]} ys"
            )
        if xs.shape[0] < 2:
            raise ShortSample(f"need at least 2 points, got {xs.shape[0]}")
        _check_finite(xs, "xs")
        _check_finite(ys, "ys")
        object.__setattr__(self, "xs", _freeze(xs))
        object.__setattr__(self, "ys", _freeze(ys))

    @property
    def n(self) -> int:
        return self.xs.shape[0]

    def swapped(self) -> "PairedSample":
        """The same observations with the roles of x and y exchanged."""
        return PairedSample(self.ys, self.xs)


@dataclass(frozen=True, eq=False)
class MultiSample:
    """n observations of M features paired with a scalar response."""

    x_rows: np.ndarray
    ys: np.ndarray

    def __post_init__(self) -> None:
        rows = np.atleast_2d(np.asarray(self.x_rows, dtype=np.float64))
        ys = np.atleast_1d(np.asarray(self.ys, dtype=np.float64))
        if rows.ndim != 2:
            raise InvalidParams("x_rows must be a 2-D array of shape (n, M)")
        if rows.shape[0] != ys.shape[0]:
            raise InvalidParams(
                f"length mismatch: {rows.shape[0]} rows vs {ys.shape[0]} ys"
            )
        if rows.shape[0] < 2:
            raise ShortSample(f"need at least 2 rows, got {rows.shape[0]}")
        if rows.shape[1] < 1:
            raise InvalidParams("need at least one feature column")
        _check_finite(rows, "x_rows")
        _check_finite(ys, "ys")
        object.__setattr__(self, "x_rows", _freeze(rows))
        object.__setattr__(self, "ys", _freeze(ys))

    @property
    def n(self) -> int:
        return self.x_rows.shape[0]

    @property
    def m(self) -> int:
        return self.x_rows.shape[1]


@dataclass(frozen=True)
class PanelValue:
    """One coefficient paired with its validity flag and optional note."""

    value: float
    valid: bool = True
    note: str = ""


@dataclass(frozen=True)
class CoefficientPanel:
    """The six coefficients for one variable pair."""

    r: PanelValue
    rho: PanelValue
    tau: PanelValue
    kappa: PanelValue
    ncc: PanelValue
    omega: PanelValue

    COLUMNS = ("r", "rho", "tau", "kappa", "ncc", "omega")

    def as_dict(self) -> dict[str, PanelValue]:
        return {name: getattr(self, name) for name in self.COLUMNS}


# ---------------------------------------------------------------------------
# ingestion


def _infer_format(path: Path, format: str | None) -> str:
    if format is not None:
        if format not in ("csv", "jsonl"):
            raise InvalidParams(f"unknown format {format!r} (expected csv or jsonl)")
        return format
    suffix = path.suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix in (".jsonl", ".ndjson", ".json"):
        return "jsonl"
    raise InvalidParams(f"cannot infer format from {path.name!r}; pass format=")


def _parse_cell(raw: object, row: int, column: str) -> float:
    if isinstance(raw, bool) or raw is None:
        raise ParseError(row, column, f"not a number: {raw!r}")
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise ParseError(row, column, f"not a number: {raw!r}") from None
    if not math.isfinite(value):
        raise NonFiniteValue(row, f"column {column!r} is {raw!r}")
    return value


def read_columns(path: str | Path, format: str | None = None) -> dict[str, np.ndarray]:
    """Read a whole csv/jsonl table as named float columns.

    Every listed column must be present in every record and parse as a
    finite real; violations raise with the 1-based data row.
    """
    path = Path(path)
    fmt = _infer_format(path, format)
    with open(path, "r", encoding="utf-8", newline="") as handle:
        if fmt == "csv":
            reader = csv.DictReader(handle)
            names = reader.fieldnames
            if not names:
                raise ParseError(0, "", "missing header row")
            columns: dict[str, list[float]] = {name: [] for name in names}
            for i, record in enumerate(reader, start=1):
                for name in names:
                    raw = record.get(name)
                    if raw is None or raw == "":
                        raise ParseError(i, name, "missing value")
                    columns[name].append(_parse_cell(raw, i, name))
        else:
            columns = {}
            for i, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise ParseError(i, "", f"invalid JSON: {exc.msg}") from None
                if not isinstance(record, Mapping):
                    raise ParseError(i, "", "record is not an object")
                if not columns:
                    columns = {name: [] for name in record}
                for name in columns:
                    if name not in record:
                        raise ParseError(i, name, "missing key")
                    columns[name].append(_parse_cell(record[name], i, name))
    return {name: np.asarray(vals, dtype=np.float64) for name, vals in columns.items()}


def load_paired(
    path: str | Path,
    format: str | None = None,
    x_col: str = "x",
    y_col: str = "y",
) -> PairedSample:
    """Load one (x, y) pair of columns from a csv or jsonl file.

    The csv dialect is fixed: comma separator, first-row header, '.'
    decimal point. Row order is preserved; non-finite values are hard
    errors rather than being dropped.
    """
    columns = read_columns(path, format)
    for col in (x_col, y_col):
        if col not in columns:
            raise ParseError(0, col, "column not present in file")
    xs, ys = columns[x_col], columns[y_col]
    if xs.shape[0] < 2:
        raise ShortSample(f"need at least 2 rows, got {xs.shape[0]}")
    return PairedSample(xs, ys)


def save_paired(
    sample: PairedSample,
    path: str | Path,
    x_col: str = "x",
    y_col: str = "y",
) -> None:
    """Write a sample as csv with round-trip-exact float formatting."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow([x_col, y_col])
        for x, y in zip(sample.xs, sample.ys):
            writer.writerow([repr(float(x)), repr(float(y))])


# ---------------------------------------------------------------------------
# basic statistics


def _as_vector(v: Iterable[float]) -> np.ndarray:
    a = np.atleast_1d(np.asarray(v, dtype=np.float64))
    if a.size == 0:
        raise EmptyInput("expected a nonempty vector")
    return a


def sample_mean(v: Iterable[float]) -> float:
    """Arithmetic mean of a nonempty vector."""
    return float(np.mean(_as_vector(v)))


def sample_median(v: Iterable[float]) -> float:
    """Middle order statistic (odd n) or the mean of the two middle
    order statistics (even n)."""
    return float(np.median(_as_vector(v)))
