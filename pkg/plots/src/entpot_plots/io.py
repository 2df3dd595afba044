"""Parsers for the entpot CLI's CSV files.

Every reader validates the documented column schema and raises
SchemaMismatch on anything unexpected; this package never computes
measures, it only renders what the CSV files carry.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class SchemaMismatch(Exception):
    """CSV file does not match the expected entpot schema."""


SCAN_COLUMNS = ["p", "x_abs", "phi", "np", "cp", "reep", "converged"]
CURVE_COLUMNS = ["abscissa", "ordinate", "param1", "param2"]
POINTS_COLUMNS = ["n1", "e1", "n2", "e2", "n3", "e3"]


@dataclass
class CsvTable:
    path: str
    columns: list[str]
    data: np.ndarray
    meta: dict = field(default_factory=dict)

    def column(self, name: str) -> np.ndarray:
        try:
            return self.data[:, self.columns.index(name)]
        except ValueError as exc:
            raise SchemaMismatch(f"{self.path}: missing column {name!r}") from exc


def read_table(path: str | Path) -> CsvTable:
    path = Path(path)
    if not path.exists():
        raise SchemaMismatch(f"{path}: file does not exist")
    meta: dict = {}
    header: list[str] | None = None
    rows: list[list[float]] = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("# ")
            if "=" in body:
                key, val = body.split("=", 1)
                if key == "parameters":
                    try:
                        meta["parameters"] = json.loads(val)
                    except json.JSONDecodeError as exc:
                        raise SchemaMismatch(f"{path}: bad parameters line") from exc
                else:
                    meta[key] = val
            continue
        if header is None:
            header = line.split(",")
            continue
        try:
            rows.append([float(v) for v in line.split(",")])
        except ValueError as exc:
            raise SchemaMismatch(f"{path}: non-numeric payload row {line!r}") from exc
    if header is None:
        raise SchemaMismatch(f"{path}: no header row found")
    if rows and any(len(r) != len(header) for r in rows):
        raise SchemaMismatch(f"{path}: ragged rows")
    data = np.array(rows) if rows else np.empty((0, len(header)))
    return CsvTable(str(path), header, data, meta)


def _expect(table: CsvTable, columns: list[str], kind: str) -> CsvTable:
    if table.columns != columns:
        raise SchemaMismatch(
            f"{table.path}: expected {kind} columns {columns}, got {table.columns}"
        )
    return table


def read_scan(path: str | Path) -> CsvTable:
    return _expect(read_table(path), SCAN_COLUMNS, "scan")


def read_curve(path: str | Path) -> CsvTable:
    table = _expect(read_table(path), CURVE_COLUMNS, "curve")
    if table.data.shape[0] < 2:
        raise SchemaMismatch(f"{table.path}: a curve needs at least two samples")
    params = table.meta.get("parameters", {})
    table.meta.setdefault("kind", params.get("kind", "curve"))
    table.meta.setdefault("plane", params.get("plane", ""))
    return table


def read_points(path: str | Path) -> dict:
    table = _expect(read_table(path), POINTS_COLUMNS, "special-points")
    if table.data.shape[0] != 1:
        raise SchemaMismatch(f"{table.path}: expected exactly one row")
    return dict(zip(POINTS_COLUMNS, table.data[0]))
