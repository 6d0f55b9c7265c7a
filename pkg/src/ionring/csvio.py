"""Deterministic CSV and JSON output plus grid parsing.

CSV files start with '#'-prefixed "# key=value" comment lines recording the
full parameter set, the constant-set version, and the package version, so
any file can be regenerated exactly from its own header. Floats are written
with repr, the shortest string that round-trips the double, which makes
repeated runs byte-identical.
"""

from __future__ import annotations

import json
import math
from typing import IO, Iterable

from . import __version__
from .constants import CONSTANTS_VERSION
from .errors import DomainError


def parse_grid(text: str) -> list[float]:
    """Parse "start:step:stop" into an inclusive grid, or a single value.

    Grid values are start + k*step; the stop endpoint is included when it
    lies within half a step of the last point.
    """
    parts = text.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise DomainError(f"grid must be 'start:step:stop' or one value: {text!r}")
    start, step, stop = (float(p) for p in parts)
    if step == 0.0:
        raise DomainError("grid step must be nonzero")
    span = (stop - start) / step
    if span < -0.5:
        raise DomainError(f"grid step direction never reaches stop: {text!r}")
    count = int(math.floor(span + 0.5))
    return [start + k * step for k in range(count + 1)]


def format_value(value) -> str:
    """Shortest round-trip text for one CSV cell."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def header_lines(params: dict) -> list[str]:
    lines = [f"# version={__version__}", f"# constants={CONSTANTS_VERSION}"]
    for key, val in params.items():
        lines.append(f"# {key}={val}")
    return lines


def write_csv(handle: IO[str], params: dict, columns: list[str],
              rows: Iterable[Iterable]) -> None:
    for line in header_lines(params):
        handle.write(line + "\n")
    handle.write(",".join(columns) + "\n")
    for row in rows:
        handle.write(",".join(format_value(v) for v in row) + "\n")


def read_csv(handle: IO[str]) -> tuple[dict, list[str], list[list[str]]]:
    """Inverse of write_csv: (header params, column names, raw string cells)."""
    params = {}
    columns = None
    rows = []
    for raw in handle:
        line = raw.rstrip("\n")
        if line.startswith("#"):
            body = line[1:].strip()
            key, _, val = body.partition("=")
            params[key.strip()] = val
        elif columns is None:
            columns = line.split(",")
        elif line:
            rows.append(line.split(","))
    if columns is None:
        raise DomainError("CSV has no column header line")
    return params, columns, rows


def write_json(handle: IO[str], obj) -> None:
    json.dump(obj, handle, indent=2)
    handle.write("\n")
