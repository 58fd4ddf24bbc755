"""Survival probability time series P(phi) = |<psi(0)|psi(phi)>|^2.

Zeros of P coincide with the orthogonality phases; for this spectrum the
series fully revives at phi = 2*pi for every distribution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import TWO_PI, ProbabilityDistribution, state_overlap


@dataclass(frozen=True, eq=False)
class TimeSeries:
    times: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if times.shape != values.shape:
            raise ValueError("times and values must have equal length")
        if np.any(values < 0.0) or np.any(values > 1.0):
            raise ValueError("probabilities outside [0, 1]")
        if times.size and times[0] == 0.0 and abs(values[0] - 1.0) > 1e-12:
            raise ValueError("P(0) must equal 1")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    def as_dict(self) -> dict:
        return {"phi": self.times.tolist(), "P": self.values.tolist()}


def survival_series(
    dist: ProbabilityDistribution, phi_max: float = TWO_PI, steps: int = 4096
) -> TimeSeries:
    """Survival probability on a uniform phase grid over [0, phi_max]."""
    if not phi_max > 0.0:
        raise ValueError("phi_max must be positive")
    if steps < 2:
        raise ValueError("steps must be at least 2")
    times = np.linspace(0.0, float(phi_max), int(steps))
    values = np.abs(state_overlap(dist, times)) ** 2
    return TimeSeries(times, np.clip(values, 0.0, 1.0))


def write_series_csv(series: TimeSeries, fh) -> None:
    fh.write("phi,P\n")
    for phi, value in zip(series.times, series.values):
        fh.write(f"{phi!r},{value!r}\n")
