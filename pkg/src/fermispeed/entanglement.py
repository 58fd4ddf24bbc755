"""Fermionic concurrence of pure two-fermion states (four-level fermions).

For Slater coefficients w_ij the squared concurrence is

    C^2 = 64 |w12 w34 - w13 w24 + w14 w23|^2,

which vanishes exactly when the state is a single Slater determinant in
some basis. In terms of the populations and the phase pair (alpha, beta)
it reduces to

    C^2 = 4 [ p1 p6 + p2 p5 + p3 p4
              - 2 sqrt(p1 p6 p2 p5) cos(alpha)
              + 2 sqrt(p1 p6 p3 p4) cos(beta)
              - 2 sqrt(p2 p5 p3 p4) cos(beta - alpha) ].

The squared value is the canonical quantity in this package; take the
``concurrence`` property for C itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import PhasePair, ProbabilityDistribution

#: Coefficient vectors must satisfy 4 * sum |w|^2 = 1 within this.
NORMALIZATION_TOLERANCE = 1e-9

# Floating-point cancellation in the population form can produce values a
# hair outside [0, 1]; anything within this dust band is clamped.
_DUST = 1e-12


@dataclass(frozen=True)
class ConcurrenceValue:
    """Squared fermionic concurrence, clamped into [0, 1]."""

    c_squared: float

    def __post_init__(self) -> None:
        value = float(self.c_squared)
        if not (-_DUST <= value <= 1.0 + _DUST):
            raise ValueError(f"squared concurrence {value!r} outside [0, 1]")
        object.__setattr__(self, "c_squared", min(max(value, 0.0), 1.0))

    @property
    def concurrence(self) -> float:
        return math.sqrt(self.c_squared)

    def as_dict(self) -> dict:
        return {"cf2": self.c_squared}


def concurrence_from_coefficients(w) -> ConcurrenceValue:
    """Concurrence from the six coefficients (w12, w13, w14, w23, w24, w34).

    Rejects inputs violating the normalization 4 * sum |w|^2 = 1.
    """
    w = np.asarray(w, dtype=complex)
    if w.shape != (6,):
        raise ValueError("expected six Slater coefficients")
    norm = 4.0 * float(np.sum(np.abs(w) ** 2))
    if abs(norm - 1.0) > NORMALIZATION_TOLERANCE:
        raise ValueError(f"normalization violated: 4*sum|w|^2 = {norm!r}")
    amplitude = w[0] * w[5] - w[1] * w[4] + w[2] * w[3]
    return ConcurrenceValue(64.0 * abs(amplitude) ** 2)


def concurrence_squared(
    dist: ProbabilityDistribution, phases: PhasePair
) -> ConcurrenceValue:
    """Squared concurrence from populations and the phase pair (alpha, beta)."""
    p1, p2, p3, p4, p5, p6 = dist.p
    a, b = phases.alpha, phases.beta
    value = 4.0 * (
        p1 * p6
        + p2 * p5
        + p3 * p4
        - 2.0 * math.sqrt(p1 * p6 * p2 * p5) * math.cos(a)
        + 2.0 * math.sqrt(p1 * p6 * p3 * p4) * math.cos(b)
        - 2.0 * math.sqrt(p2 * p5 * p3 * p4) * math.cos(b - a)
    )
    return ConcurrenceValue(value)


def concurrence_squared_grid(
    dist: ProbabilityDistribution, alphas: np.ndarray, betas: np.ndarray
) -> np.ndarray:
    """Vectorized squared concurrence over broadcastable phase arrays."""
    p1, p2, p3, p4, p5, p6 = dist.p
    a = np.asarray(alphas, dtype=float)
    b = np.asarray(betas, dtype=float)
    value = 4.0 * (
        p1 * p6
        + p2 * p5
        + p3 * p4
        - 2.0 * math.sqrt(p1 * p6 * p2 * p5) * np.cos(a)
        + 2.0 * math.sqrt(p1 * p6 * p3 * p4) * np.cos(b)
        - 2.0 * math.sqrt(p2 * p5 * p3 * p4) * np.cos(b - a)
    )
    return np.clip(value, 0.0, 1.0)
