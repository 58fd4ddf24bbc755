"""Domain model for a pair of identical fermions on four equally spaced levels.

Basis states of the two-particle space are indexed 1..6 in order of the
occupied single-particle pairs (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
Their energies, in units of the single-particle spacing, are 3, 4, 5, 5, 6
and 7; states 3 and 4 are degenerate. hbar and the spacing are fixed to 1,
so every time in this package is the dimensionless phase
phi = epsilon * t / hbar, and the evolution is exactly 2*pi periodic.

The paired sum/difference coordinates

    x = p1 + p6, y = p1 - p6,
    u = p2 + p5, v = p2 - p5,
    w = p3 + p4, z = p3 - p4,

linearize both the orthogonality analysis and the speed-limit moments and
are used throughout the other modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

TWO_PI = 2.0 * math.pi

#: Two-particle energies in units of the level spacing.
RELATIVE_LEVELS = (3.0, 4.0, 5.0, 5.0, 6.0, 7.0)

_LEVELS = np.array(RELATIVE_LEVELS)

#: Populations at or below this threshold count as absent everywhere.
ZERO_POPULATION = 1e-12

#: Probability vectors whose sum is off by at most this are renormalized;
#: anything worse is rejected as a genuine input error.
SUM_TOLERANCE = 1e-9

_COORD_TOLERANCE = 1e-12


class InfeasibleCoordinatesError(ValueError):
    """No probability distribution realizes the given (x,y,u,v,w,z)."""


@dataclass(frozen=True)
class Spectrum:
    """The fixed six-level spectrum: nondecreasing, with one degenerate pair."""

    levels: tuple[float, ...] = RELATIVE_LEVELS

    def __post_init__(self) -> None:
        if len(self.levels) != 6:
            raise ValueError("spectrum must list six levels")
        if any(b < a for a, b in zip(self.levels, self.levels[1:])):
            raise ValueError("levels must be nondecreasing")
        if self.levels[2] != self.levels[3]:
            raise ValueError("levels 3 and 4 must be degenerate")


SPECTRUM = Spectrum()


def _parse_value(token: str) -> float:
    """Parse a decimal or a plain fraction such as '1/6'."""
    token = token.strip()
    try:
        return float(token)
    except ValueError:
        return float(Fraction(token))


@dataclass(frozen=True)
class ProbabilityDistribution:
    """Populations p1..p6 over the six basis states, normalized on creation."""

    p: tuple[float, ...]

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.p)
        if len(values) != 6:
            raise ValueError(f"expected six probabilities, got {len(values)}")
        cleaned = []
        for i, value in enumerate(values):
            if not (-ZERO_POPULATION <= value <= 1.0 + SUM_TOLERANCE):
                raise ValueError(f"p{i + 1}={value!r} lies outside [0, 1]")
            cleaned.append(min(max(value, 0.0), 1.0))
        total = math.fsum(cleaned)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        object.__setattr__(self, "p", tuple(v / total for v in cleaned))

    @classmethod
    def from_text(cls, text: str) -> "ProbabilityDistribution":
        """Parse the six comma-separated values p1..p6 (decimals or fractions)."""
        return cls(tuple(_parse_value(tok) for tok in text.split(",")))

    @classmethod
    def uniform(cls) -> "ProbabilityDistribution":
        return cls((1 / 6,) * 6)

    @classmethod
    def two_level(cls, i: int, j: int, weight: float = 0.5) -> "ProbabilityDistribution":
        """Distribution with p_i = weight, p_j = 1 - weight (1-based indices)."""
        if not (1 <= i <= 6 and 1 <= j <= 6 and i != j):
            raise ValueError("indices must be distinct and in 1..6")
        p = [0.0] * 6
        p[i - 1] = weight
        p[j - 1] = 1.0 - weight
        return cls(tuple(p))

    @classmethod
    def equiprobable_energy(cls, p3: float = 0.1) -> "ProbabilityDistribution":
        """Uniform weight 1/5 on each distinct energy; p3 splits the degenerate pair."""
        if not (0.0 <= p3 <= 0.2):
            raise ValueError("p3 must lie in [0, 1/5]")
        return cls((0.2, 0.2, p3, 0.2 - p3, 0.2, 0.2))

    def as_dict(self) -> dict:
        return {"p": list(self.p)}


def parse_distribution(text: str) -> ProbabilityDistribution:
    """Parse the distribution text format: 'p1,p2,p3,p4,p5,p6'."""
    return ProbabilityDistribution.from_text(text)


@dataclass(frozen=True)
class PhasePair:
    """The two phase combinations the concurrence depends on, each in [0, 2*pi)."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", float(self.alpha) % TWO_PI)
        object.__setattr__(self, "beta", float(self.beta) % TWO_PI)

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta}


@dataclass(frozen=True)
class DerivedCoordinates:
    """Paired sum/difference coordinates of a distribution (see module docstring)."""

    x: float
    y: float
    u: float
    v: float
    w: float
    z: float

    def __post_init__(self) -> None:
        for total, diff, names in (
            (self.x, self.y, "xy"),
            (self.u, self.v, "uv"),
            (self.w, self.z, "wz"),
        ):
            if not (-_COORD_TOLERANCE <= total <= 1.0 + _COORD_TOLERANCE):
                raise InfeasibleCoordinatesError(
                    f"infeasible coordinates: {names[0]}={total!r} outside [0, 1]"
                )
            if abs(diff) > total + _COORD_TOLERANCE:
                raise InfeasibleCoordinatesError(
                    f"infeasible coordinates: |{names[1]}| exceeds {names[0]}"
                )
        if abs(self.x + self.u + self.w - 1.0) > _COORD_TOLERANCE:
            raise InfeasibleCoordinatesError(
                "infeasible coordinates: x + u + w differs from 1"
            )

    def as_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "u": self.u,
            "v": self.v,
            "w": self.w,
            "z": self.z,
        }


@dataclass(frozen=True)
class TwoFermionState:
    """A distribution together with the six state phases theta_n.

    Only the two combinations alpha = t1+t6-t2-t5 and beta = t1+t6-t3-t4
    affect any quantity computed downstream; the individual phases are kept
    for completeness.
    """

    dist: ProbabilityDistribution
    theta: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.theta) != 6:
            raise ValueError("expected six phases")
        object.__setattr__(self, "theta", tuple(float(t) for t in self.theta))

    @classmethod
    def from_phase_pair(
        cls, dist: ProbabilityDistribution, phases: PhasePair
    ) -> "TwoFermionState":
        """Pick the representative phase vector (alpha, 0, alpha-beta, 0, 0, 0)."""
        return cls(dist, (phases.alpha, 0.0, phases.alpha - phases.beta, 0.0, 0.0, 0.0))

    def phase_pair(self) -> PhasePair:
        t = self.theta
        return PhasePair(t[0] + t[5] - t[1] - t[4], t[0] + t[5] - t[2] - t[3])

    def slater_coefficients(self) -> np.ndarray:
        """The six coefficients w = (w12, w13, w14, w23, w24, w34).

        Each is sqrt(p_n) * exp(i theta_n) / 2, so 4 * sum |w|^2 = 1.
        """
        p = np.asarray(self.dist.p)
        theta = np.asarray(self.theta)
        return 0.5 * np.sqrt(p) * np.exp(1j * theta)

    def as_dict(self) -> dict:
        return {"p": list(self.dist.p), "theta": list(self.theta)}


def derive_coordinates(dist: ProbabilityDistribution) -> DerivedCoordinates:
    """Map p1..p6 to the sum/difference coordinates (x, y, u, v, w, z)."""
    p1, p2, p3, p4, p5, p6 = dist.p
    return DerivedCoordinates(
        x=p1 + p6, y=p1 - p6, u=p2 + p5, v=p2 - p5, w=p3 + p4, z=p3 - p4
    )


def restore_distribution(coords: DerivedCoordinates) -> ProbabilityDistribution:
    """Invert derive_coordinates. The coordinate type already enforces
    feasibility, so this is a total function on valid inputs."""
    return ProbabilityDistribution(
        (
            (coords.x + coords.y) / 2.0,
            (coords.u + coords.v) / 2.0,
            (coords.w + coords.z) / 2.0,
            (coords.w - coords.z) / 2.0,
            (coords.u - coords.v) / 2.0,
            (coords.x - coords.y) / 2.0,
        )
    )


def state_overlap(dist: ProbabilityDistribution, phi):
    """Overlap of the evolved state with the initial one at phase phi.

    Returns sum_n p_n exp(-i E_n phi). Accepts a scalar phase or an array
    of phases; the magnitude never exceeds 1, the value at phi = 0 is 1,
    and the function is 2*pi periodic.
    """
    phi_arr = np.asarray(phi, dtype=float)
    weights = np.exp(-1j * np.multiply.outer(phi_arr, _LEVELS))
    out = weights @ np.asarray(dist.p)
    if phi_arr.ndim == 0:
        return complex(out)
    return out
