"""Energy moments and the unified quantum speed limit.

The limit is the larger of the dispersion bound pi / (2 sigma) and the
mean-relative-energy bound pi / (2 (<H> - E_min)), where E_min is the
lowest level actually populated (a tighter choice than the global ground
level). With the level codes m and M of the lowest and highest occupied
levels, both moments depend on the distribution only through the plane
coordinates 2y + v and 4x + u:

    <H> - E_min = (5 - m) - (2y + v),
    sigma^2     = (4x + u) - (2y + v)^2.

Stationary states (support on a single energy) have sigma = 0 and all
bounds infinite; infinities serialize as the string "inf".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import ZERO_POPULATION, ProbabilityDistribution, derive_coordinates

BOUND_MT = "MT"
BOUND_ML = "ML"
BOUND_EQUAL = "EQUAL"

#: Bounds closer than this count as equal.
EQUAL_TOLERANCE = 1e-12

_INF = math.inf


class InfeasiblePlanePointError(ValueError):
    """Plane point below the zero-dispersion parabola (sigma^2 < 0)."""


def _time_field(value: float):
    return "inf" if math.isinf(value) else value


@dataclass(frozen=True)
class SpeedLimitReport:
    """Moments, both bounds and the active one for a single state.

    ``M_index`` is None when the report was evaluated from plane
    coordinates alone, which do not determine the highest occupied level.
    """

    m_index: int
    M_index: int | None
    mean_rel_energy: float
    sigma: float
    tau_mt: float
    tau_ml: float
    tau_qsl: float
    active_bound: str

    def __post_init__(self) -> None:
        if self.m_index not in (3, 4, 5, 6, 7):
            raise ValueError("m_index must be in 3..7")
        if self.M_index is not None and not (self.m_index <= self.M_index <= 7):
            raise ValueError("M_index must be in m_index..7")
        if self.tau_qsl != max(self.tau_mt, self.tau_ml):
            raise ValueError("tau_qsl must be the larger bound")

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.tau_qsl)

    def as_dict(self, pi_units: bool = False) -> dict:
        scale = math.pi if pi_units else 1.0
        return {
            "m_index": self.m_index,
            "M_index": self.M_index,
            "mean_rel_energy": self.mean_rel_energy,
            "sigma": self.sigma,
            "tau_mt": _time_field(self.tau_mt / scale),
            "tau_ml": _time_field(self.tau_ml / scale),
            "tau_qsl": _time_field(self.tau_qsl / scale),
            "active_bound": self.active_bound,
            "time_units": "pi*hbar/epsilon" if pi_units else "hbar/epsilon",
        }


def occupied_extremes(dist: ProbabilityDistribution) -> tuple[int, int]:
    """Level codes (m, M) of the lowest and highest populated levels.

    Populations at or below the zero threshold count as absent; the
    degenerate pair p3, p4 is tested through its sum.
    """
    p1, p2, p3, p4, p5, p6 = dist.p
    pair = p3 + p4
    if p1 > ZERO_POPULATION:
        m = 3
    elif p2 > ZERO_POPULATION:
        m = 4
    elif pair > ZERO_POPULATION:
        m = 5
    elif p5 > ZERO_POPULATION:
        m = 6
    else:
        m = 7
    if p6 > ZERO_POPULATION:
        M = 7
    elif p5 > ZERO_POPULATION:
        M = 6
    elif pair > ZERO_POPULATION:
        M = 5
    elif p2 > ZERO_POPULATION:
        M = 4
    else:
        M = 3
    return m, M


def _bounds(mean: float, sigma: float) -> tuple[float, float, float, str]:
    tau_mt = _INF if sigma <= 0.0 else math.pi / (2.0 * sigma)
    tau_ml = _INF if mean <= EQUAL_TOLERANCE else math.pi / (2.0 * mean)
    tau_qsl = max(tau_mt, tau_ml)
    if tau_mt == tau_ml or abs(tau_mt - tau_ml) <= EQUAL_TOLERANCE:
        active = BOUND_EQUAL
    elif tau_ml > tau_mt:
        active = BOUND_ML
    else:
        active = BOUND_MT
    return tau_mt, tau_ml, tau_qsl, active


def speed_limit(dist: ProbabilityDistribution) -> SpeedLimitReport:
    """Full speed-limit report for a distribution."""
    m, M = occupied_extremes(dist)
    if m == M:
        # stationary: support on one energy, never reaches orthogonality
        return SpeedLimitReport(m, M, 0.0, 0.0, _INF, _INF, _INF, BOUND_EQUAL)
    c = derive_coordinates(dist)
    a = 2.0 * c.y + c.v
    b = 4.0 * c.x + c.u
    mean = (5.0 - m) - a
    variance = max(b - a * a, 0.0)
    sigma = math.sqrt(variance)
    tau_mt, tau_ml, tau_qsl, active = _bounds(mean, sigma)
    return SpeedLimitReport(m, M, mean, sigma, tau_mt, tau_ml, tau_qsl, active)


def qsl_from_plane(
    two_y_plus_v: float, four_x_plus_u: float, m_index: int = 3
) -> SpeedLimitReport:
    """Speed-limit report straight from the plane coordinates (2y+v, 4x+u).

    Points with negative sigma^2 lie below the zero-dispersion parabola and
    correspond to no state; they raise InfeasiblePlanePointError.
    """
    a = float(two_y_plus_v)
    b = float(four_x_plus_u)
    if m_index not in (3, 4, 5, 6, 7):
        raise ValueError("m_index must be in 3..7")
    if not (-2.0 - 1e-9 <= a <= 2.0 + 1e-9):
        raise ValueError(f"2y+v = {a!r} outside [-2, 2]")
    if not (-1e-9 <= b <= 4.0 + 1e-9):
        raise ValueError(f"4x+u = {b!r} outside [0, 4]")
    variance = b - a * a
    if variance < -EQUAL_TOLERANCE:
        raise InfeasiblePlanePointError("below dispersion parabola")
    mean = (5.0 - m_index) - a
    if mean < -EQUAL_TOLERANCE:
        raise ValueError(f"mean relative energy negative for m_index={m_index}")
    sigma = math.sqrt(max(variance, 0.0))
    tau_mt, tau_ml, tau_qsl, active = _bounds(max(mean, 0.0), sigma)
    return SpeedLimitReport(
        m_index, None, max(mean, 0.0), sigma, tau_mt, tau_ml, tau_qsl, active
    )
