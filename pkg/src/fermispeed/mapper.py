"""Dense grid evaluations of the speed-limit plane and the solution regions.

Each map is emitted as a rectangular CSV (`coord1,coord2,value,tag`) plus a
JSON manifest stating axes, units and version. Excluded cells keep an
empty value field and carry the exclusion reason in the tag, so the files
stay strictly rectangular for plotting tools. Evaluation order is
canonical row-major (coord1 outer, coord2 inner) regardless of how cells
are computed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .core import TWO_PI
from .orthogonality import branch_cos_value
from .speedlimit import InfeasiblePlanePointError, qsl_from_plane

#: Display cap for speed-limit values, in hbar/epsilon.
QSL_VALUE_CAP = TWO_PI

_FIRST_ROOT_FLOOR = math.pi / 4.0

TAG_EXCLUDED_PARABOLA = "below-dispersion-parabola"
TAG_EXCLUDED_NORM = "x+u>1"
TAG_EXCLUDED_STATIONARY = "stationary"
TAG_EXCLUDED_NO_SOLUTION = "no-solution"
TAG_EXCLUDED_BOUNDS = "population-bounds"
TAG_EXCLUDED_FLOOR = "below-first-root-bound"
TAG_SOLUTION = "solution"
TAG_UNCONSTRAINED = "unconstrained"


@dataclass(frozen=True)
class GridSpec:
    """Axis ranges (closed intervals) and per-axis resolutions."""

    coord1_range: tuple[float, float]
    coord2_range: tuple[float, float]
    res1: int = 512
    res2: int = 512

    def __post_init__(self) -> None:
        for lo, hi in (self.coord1_range, self.coord2_range):
            if not lo < hi:
                raise ValueError("axis range must be a nonempty interval")
        if self.res1 < 2 or self.res2 < 2:
            raise ValueError("resolution must be at least 2 per axis")

    def axis1(self) -> np.ndarray:
        return np.linspace(*self.coord1_range, self.res1)

    def axis2(self) -> np.ndarray:
        return np.linspace(*self.coord2_range, self.res2)


@dataclass(frozen=True)
class GridCell:
    coord1: float
    coord2: float
    value: float | None
    tag: str


@dataclass(frozen=True, eq=False)
class GridMap:
    """A computed grid: values (NaN where no finite value applies) and tags."""

    spec: GridSpec
    kind: str
    units: str
    values: np.ndarray
    tags: np.ndarray
    meta: dict = field(default_factory=dict)

    def cells(self):
        axis1 = self.spec.axis1()
        axis2 = self.spec.axis2()
        for i in range(self.spec.res1):
            for j in range(self.spec.res2):
                raw = float(self.values[i, j])
                value = None if math.isnan(raw) else raw
                yield GridCell(float(axis1[i]), float(axis2[j]), value, str(self.tags[i, j]))

    def manifest(self) -> dict:
        return {
            "kind": self.kind,
            "coord1": {"range": list(self.spec.coord1_range), "resolution": self.spec.res1},
            "coord2": {"range": list(self.spec.coord2_range), "resolution": self.spec.res2},
            "value_units": self.units,
            "version": __version__,
            **self.meta,
        }


def default_grid_spec(kind: str, resolution: int = 512) -> GridSpec:
    """Full-domain grid for one of the map kinds qsl, xu, yv."""
    ranges = {
        "qsl": ((-2.0, 2.0), (0.0, 4.0)),
        "xu": ((0.0, 1.0), (0.0, 1.0)),
        "yv": ((-1.0, 1.0), (-1.0, 1.0)),
    }
    if kind not in ranges:
        raise ValueError(f"unknown map kind {kind!r}")
    r1, r2 = ranges[kind]
    return GridSpec(r1, r2, resolution, resolution)


def map_qsl_plane(spec: GridSpec, m_index: int = 3) -> GridMap:
    """Speed limit over the plane (2y+v, 4x+u), capped at 2*pi for display.

    Cells below the zero-dispersion parabola are excluded; cells on it have
    infinite value. Tags name the active bound.
    """
    lo1, hi1 = spec.coord1_range
    lo2, hi2 = spec.coord2_range
    if lo1 < -2.0 - 1e-9 or hi1 > 2.0 + 1e-9 or lo2 < -1e-9 or hi2 > 4.0 + 1e-9:
        raise ValueError("qsl map ranges must lie within [-2,2] x [0,4]")
    values = np.full((spec.res1, spec.res2), np.nan)
    tags = np.empty((spec.res1, spec.res2), dtype=object)
    for i, a in enumerate(spec.axis1()):
        for j, b in enumerate(spec.axis2()):
            try:
                report = qsl_from_plane(float(a), float(b), m_index)
            except InfeasiblePlanePointError:
                tags[i, j] = TAG_EXCLUDED_PARABOLA
                continue
            tags[i, j] = report.active_bound
            if math.isinf(report.tau_qsl):
                values[i, j] = math.inf
            else:
                values[i, j] = min(report.tau_qsl, QSL_VALUE_CAP)
    return GridMap(
        spec,
        "qsl-plane",
        "hbar/epsilon",
        values,
        tags,
        {"m_index": m_index, "value_cap": QSL_VALUE_CAP, "coord1_name": "2y+v", "coord2_name": "4x+u"},
    )


def map_xu_region(spec: GridSpec, branch: str = "plus") -> GridMap:
    """First solution phase of the cosine quadratic over (x, u), one branch.

    Values are phi_1 / pi on admissible cells; everything else is excluded
    with a reason tag.
    """
    if branch not in ("plus", "minus"):
        raise ValueError("branch must be 'plus' or 'minus'")
    lo1, hi1 = spec.coord1_range
    lo2, hi2 = spec.coord2_range
    if lo1 < -1e-9 or hi1 > 1.0 + 1e-9 or lo2 < -1e-9 or hi2 > 1.0 + 1e-9:
        raise ValueError("xu map ranges must lie within [0,1] x [0,1]")
    values = np.full((spec.res1, spec.res2), np.nan)
    tags = np.empty((spec.res1, spec.res2), dtype=object)
    for i, x in enumerate(spec.axis1()):
        for j, u in enumerate(spec.axis2()):
            if x + u > 1.0 + 1e-12:
                tags[i, j] = TAG_EXCLUDED_NORM
                continue
            if x + u <= 0.0:
                tags[i, j] = TAG_EXCLUDED_STATIONARY
                continue
            try:
                c = branch_cos_value(float(x), float(u), branch)
            except ValueError:
                tags[i, j] = TAG_EXCLUDED_STATIONARY
                continue
            if c is None:
                tags[i, j] = TAG_EXCLUDED_NO_SOLUTION
                continue
            values[i, j] = math.acos(c) / math.pi
            tags[i, j] = branch
    return GridMap(
        spec,
        "xu-region",
        "fractions of pi",
        values,
        tags,
        {"branch": branch, "coord1_name": "x", "coord2_name": "u"},
    )


def map_yv_region(spec: GridSpec) -> GridMap:
    """First solution phase of the phase condition over (y, v).

    For y != 0 the condition fixes cos(phi) = -v / (2y); cells whose phase
    falls below pi/4 conflict with the cosine quadratic's bound and are
    excluded. On the y = 0 row only the origin is admissible, where the
    phase is unconstrained by (y, v) alone.
    """
    lo1, hi1 = spec.coord1_range
    lo2, hi2 = spec.coord2_range
    if lo1 < -1.0 - 1e-9 or hi1 > 1.0 + 1e-9 or lo2 < -1.0 - 1e-9 or hi2 > 1.0 + 1e-9:
        raise ValueError("yv map ranges must lie within [-1,1] x [-1,1]")
    values = np.full((spec.res1, spec.res2), np.nan)
    tags = np.empty((spec.res1, spec.res2), dtype=object)
    for i, y in enumerate(spec.axis1()):
        for j, v in enumerate(spec.axis2()):
            if y == 0.0:
                tags[i, j] = TAG_UNCONSTRAINED if v == 0.0 else TAG_EXCLUDED_NO_SOLUTION
                continue
            if abs(v + y) > 1.0 + 1e-12 or abs(v - y) > 1.0 + 1e-12:
                tags[i, j] = TAG_EXCLUDED_BOUNDS
                continue
            c = -v / (2.0 * y)
            if abs(c) > 1.0:
                tags[i, j] = TAG_EXCLUDED_NO_SOLUTION
                continue
            phi = math.acos(c)
            if phi < _FIRST_ROOT_FLOOR - 1e-12:
                tags[i, j] = TAG_EXCLUDED_FLOOR
                continue
            values[i, j] = phi / math.pi
            tags[i, j] = TAG_SOLUTION
    return GridMap(
        spec,
        "yv-region",
        "fractions of pi",
        values,
        tags,
        {"coord1_name": "y", "coord2_name": "v"},
    )


def _value_text(value: float | None) -> str:
    if value is None:
        return ""
    if math.isinf(value):
        return "inf"
    return repr(value)


def write_grid_csv(gmap: GridMap, fh) -> None:
    fh.write("coord1,coord2,value,tag\n")
    for cell in gmap.cells():
        fh.write(f"{cell.coord1!r},{cell.coord2!r},{_value_text(cell.value)},{cell.tag}\n")


def write_grid_manifest(gmap: GridMap, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(gmap.manifest(), fh, indent=2)
        fh.write("\n")


def _json_value(value: float | None):
    if value is None:
        return None
    if math.isinf(value):
        return "inf"
    return value


def grid_as_json(gmap: GridMap) -> dict:
    """Self-describing JSON variant: manifest plus cell rows."""
    cells = [
        [cell.coord1, cell.coord2, _json_value(cell.value), cell.tag]
        for cell in gmap.cells()
    ]
    return {
        "manifest": gmap.manifest(),
        "columns": ["coord1", "coord2", "value", "tag"],
        "cells": cells,
    }
