"""Loading and validation of Riemann zeta zero-ordinate tables.

Tables are plain text, one positive ordinate per line, ascending, in the
style of the widely published zero tables; gzip is accepted transparently
by file extension.  The package vendors the first 10^5 ordinates as a
fixture so the zero-sum route works offline.
"""

from __future__ import annotations

import gzip
import importlib.resources
import math
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

#: First zero ordinate, used to recognise that a file starts at the beginning.
FIRST_ORDINATE = 14.134725

ZEROS_ENV_VAR = "PRIMEPAIR_ZEROS"
_FIXTURE_NAME = "zeros_100k.txt.gz"


class ZeroTableError(ValueError):
    """Base class for zero-table ingestion failures."""


class ZeroTableCorrupt(ZeroTableError):
    """Empty file or non-monotone ordinate sequence."""


class ZeroTableWrongFile(ZeroTableError):
    """File parses but clearly is not a zero table from the beginning."""


class ZeroTableParseError(ZeroTableError):
    """A line failed to parse as a decimal ordinate."""


@dataclass(frozen=True)
class ZeroTable:
    """Ascending positive ordinates gamma of zeros 1/2 + i*gamma."""

    ordinates: np.ndarray
    source: str

    def __len__(self) -> int:
        return int(self.ordinates.size)


def load_zeros(path, max_count: int | None = None) -> ZeroTable:
    """Parse and validate a zero-ordinate file.

    Raises ZeroTableParseError (with the line number) on malformed lines,
    ZeroTableCorrupt on empty or non-increasing data, ZeroTableWrongFile
    when the first ordinate is not near 14.134725.
    """
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    ordinates: list = []
    with opener(path, "rt") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                value = float(text)
            except ValueError:
                raise ZeroTableParseError(
                    f"{path}: line {lineno}: cannot parse ordinate {text!r}"
                ) from None
            ordinates.append(value)
            if max_count is not None and len(ordinates) >= max_count:
                break
    if not ordinates:
        raise ZeroTableCorrupt(f"{path}: no ordinates found")
    arr = np.asarray(ordinates, dtype=np.float64)
    steps = np.diff(arr)
    if arr.size > 1 and not np.all(steps > 0):
        bad = int(np.flatnonzero(steps <= 0)[0])
        raise ZeroTableCorrupt(
            f"{path}: ordinates not strictly increasing at entry {bad + 2} "
            f"({arr[bad]} -> {arr[bad + 1]})"
        )
    if not 14.0 <= arr[0] <= 14.3:
        raise ZeroTableWrongFile(
            f"{path}: first ordinate {arr[0]} is not near {FIRST_ORDINATE}; "
            "not a zero table starting at the first zero"
        )
    return ZeroTable(ordinates=arr, source=str(path))


def write_zeros(table: ZeroTable, path, decimals: int = 9) -> None:
    """Serialise a table back to one-ordinate-per-line text (gzip by extension)."""
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "wt") as fh:
        for value in table.ordinates:
            fh.write(f"{value:.{decimals}f}\n")


def _rvm_main_term(t: np.ndarray) -> np.ndarray:
    """Smooth main term of the zero counting function N(t)."""
    w = t / (2.0 * math.pi)
    return w * np.log(w) - w + 7.0 / 8.0


def zero_count_check(table: ZeroTable) -> float:
    """Max deviation of the table's zero counts from the smooth count model.

    For a table that starts at the first zero the comparison is absolute;
    for a slice out of a larger table only count increments within the
    table's own range are compared.  Well-formed tables stay below 3.
    """
    gam = table.ordinates
    if gam.size == 0:
        raise ValueError("zero table is empty")
    expected = _rvm_main_term(gam)
    counted = np.arange(1, gam.size + 1, dtype=np.float64)
    if gam[0] < 15.0:
        dev = counted - expected
    else:
        dev = (counted - 1.0) - (expected - expected[0])
    return float(np.max(np.abs(dev)))


def default_zeros_path() -> Path:
    """Zero-table path: the environment variable if set, else the fixture."""
    env = os.environ.get(ZEROS_ENV_VAR)
    if env:
        return Path(env)
    return fixture_path()


def fixture_path() -> Path:
    """Path of the vendored 10^5-ordinate fixture."""
    res = importlib.resources.files("primepairs").joinpath("data", _FIXTURE_NAME)
    return Path(str(res))
