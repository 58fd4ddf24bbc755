"""Root solving for the orthogonality condition.

The evolved state is orthogonal to the initial one at phase phi exactly
when q = exp(-i phi) is a unit-circle root of

    p1 + p2 q + (p3 + p4) q^2 + p5 q^3 + p6 q^4 = 0.

Factoring out the global phase splits this into the simultaneous real pair

    g(phi) = w + u cos(phi) + x cos(2 phi)      = 0,
    h(phi) = (v + 2 y cos(phi)) sin(phi)        = 0,

so every root either has sin(phi) = 0 (family I, which forces phi = pi and
exists exactly when u = 1/2) or satisfies v + 2 y cos(phi) = 0 (family II).
g = 0 is a quadratic in cos(phi) whose closed-form solutions are exposed as
``real1_cos_solutions``.

Solver strategy: candidate phases come from the companion-matrix
eigenvalues of the degree-trimmed polynomial; near-unit-circle roots are
refined by bisection on g (falling back to the closed-form cosine values
when the bracket does not change sign, as happens at tangencies) and then
certified directly against |overlap| < tol. phi = pi is checked separately
because the polynomial root there is degenerate whenever u = 1/2 and
eigenvalue accuracy degrades. Certified roots closer than the dedupe
spacing, or separated by a gap on which the overlap stays below tolerance
(one flat basin), are merged into a single reported root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    TWO_PI,
    ZERO_POPULATION,
    ProbabilityDistribution,
    derive_coordinates,
    state_overlap,
)
from .speedlimit import occupied_extremes

FAMILY_I = "I"
FAMILY_II = "II"
FAMILY_BOTH = "BOTH"
FAMILY_NONE = "NONE"

DEFAULT_TOLERANCE = 1e-9

# Candidate filter only; certification against the overlap is the real gate,
# so a generous band costs nothing and keeps near-tangent dips (polynomial
# roots just off the circle whose overlap still certifies) from being lost.
_UNIT_CIRCLE_TOL = 1e-3
_DEDUPE_SPACING = 1e-8
_BASIN_WIDTH = 1e-3
_BRACKET = 1e-4


@dataclass(frozen=True)
class OrthogonalityResult:
    """All root phases in (0, 2*pi], family tags, and the first root."""

    roots: tuple[float, ...]
    families: tuple[str, ...]
    phi_1: float | None
    reachable: bool

    def as_dict(self) -> dict:
        return {
            "reachable": self.reachable,
            "phi_1": self.phi_1,
            "phi_1_in_pi": None if self.phi_1 is None else self.phi_1 / math.pi,
            "roots": list(self.roots),
            "roots_in_pi": [r / math.pi for r in self.roots],
            "families": list(self.families),
        }


def branch_cos_value(x: float, u: float, branch: str) -> float | None:
    """Admissible cos(phi) solving g = 0 for one sign branch, or None.

    For x above the population threshold the two branches are
    (-u +/- sqrt((4x+u)^2 - 8x)) / (4x); the x = 0 line is the limit of the
    plus branch and evaluates to (u-1)/u, admissible only for u >= 1/2.
    """
    if branch not in ("plus", "minus"):
        raise ValueError("branch must be 'plus' or 'minus'")
    if x <= ZERO_POPULATION:
        if u <= ZERO_POPULATION:
            raise ValueError("stationary (w=1)")
        if branch == "minus":
            return None
        c = (u - 1.0) / u
        return max(c, -1.0) if c >= -1.0 - 1e-12 else None
    disc = (4.0 * x + u) ** 2 - 8.0 * x
    if disc < 0.0:
        if disc < -1e-15:
            return None
        disc = 0.0
    root = math.sqrt(disc)
    c = (-u + root) / (4.0 * x) if branch == "plus" else (-u - root) / (4.0 * x)
    if c < -1.0 - 1e-12:
        return None
    return min(max(c, -1.0), 1.0)


def real1_cos_solutions(x: float, u: float) -> tuple[float, ...]:
    """All admissible cos(phi) values solving g = 0, plus branch first.

    Raises for the stationary point x = u = 0 (all weight on the degenerate
    middle level); returns an empty tuple when neither branch admits a
    value in [-1, 1].
    """
    if not (-1e-12 <= x <= 1.0 + 1e-12 and -1e-12 <= u <= 1.0 + 1e-12):
        raise ValueError("x and u must lie in [0, 1]")
    if x + u > 1.0 + 1e-12:
        raise ValueError("x + u exceeds 1")
    out = []
    for branch in ("plus", "minus"):
        c = branch_cos_value(x, u, branch)
        if c is not None and (not out or abs(c - out[-1]) > 0.0):
            out.append(c)
    return tuple(out)


def real_root_times(
    dist: ProbabilityDistribution, horizon: float = TWO_PI
) -> tuple[float, ...]:
    """Phases of the purely real polynomial roots: odd multiples of pi.

    Nonempty exactly when u = p2 + p5 equals 1/2 (within 1e-9); the roots
    returned are those at or below ``horizon``.
    """
    coords = derive_coordinates(dist)
    if abs(coords.u - 0.5) > 1e-9:
        return ()
    out = []
    l = 1
    while l * math.pi <= horizon + 1e-12:
        out.append(l * math.pi)
        l += 2
    return tuple(out)


def _g(x: float, u: float, w: float, phi: float) -> float:
    return w + u * math.cos(phi) + x * math.cos(2.0 * phi)


def _family_tag(y: float, v: float, phi: float, tol: float) -> str:
    is_real = abs(math.sin(phi)) < tol
    is_phase = abs(v + 2.0 * y * math.cos(phi)) < tol
    if is_real and is_phase:
        return FAMILY_BOTH
    if is_real:
        return FAMILY_I
    if is_phase:
        return FAMILY_II
    return FAMILY_NONE


def classify_family(
    dist: ProbabilityDistribution, phi: float, tol: float = DEFAULT_TOLERANCE
) -> str:
    """Tag a root as family I (sin phi = 0), II (v + 2y cos phi = 0) or BOTH."""
    if abs(state_overlap(dist, phi)) >= tol:
        raise ValueError("not an orthogonality root")
    coords = derive_coordinates(dist)
    return _family_tag(coords.y, coords.v, phi, tol)


def _bisect_g(x, u, w, lo, hi, flo):
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= 1e-15:
            return mid
        fmid = _g(x, u, w, mid)
        if fmid == 0.0:
            return mid
        if (flo < 0.0) != (fmid < 0.0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def _golden_overlap_min(dist, lo: float, hi: float) -> float:
    inv = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv * (b - a)
    d = a + inv * (b - a)
    fc, fd = abs(state_overlap(dist, c)), abs(state_overlap(dist, d))
    for _ in range(90):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv * (b - a)
            fc = abs(state_overlap(dist, c))
        else:
            a, c, fc = c, d, fd
            d = a + inv * (b - a)
            fd = abs(state_overlap(dist, d))
    return 0.5 * (a + b)


def _refine_candidate(dist, x: float, u: float, w: float, phi0: float) -> float:
    lo, hi = phi0 - _BRACKET, phi0 + _BRACKET
    flo, fhi = _g(x, u, w, lo), _g(x, u, w, hi)
    if (flo < 0.0) != (fhi < 0.0):
        return _bisect_g(x, u, w, lo, hi, flo)
    # no sign change: tangency or eigenvalue cluster; snap to the
    # closed-form cosine root nearest the candidate
    try:
        cosines = real1_cos_solutions(x, u)
    except ValueError:
        cosines = ()
    if cosines:
        c = min(cosines, key=lambda cc: abs(cc - math.cos(phi0)))
        phi = math.acos(c)
        return phi if phi0 <= math.pi else TWO_PI - phi
    # no real cosine either (dip just below the tangency boundary):
    # settle on the overlap minimum itself
    return _golden_overlap_min(dist, lo, hi)


def solve_orthogonality(
    dist: ProbabilityDistribution, tol: float = DEFAULT_TOLERANCE
) -> OrthogonalityResult:
    """All orthogonality phases of a distribution within one period (0, 2*pi].

    Every returned root satisfies |overlap| < tol. Stationary distributions
    return an empty, unreachable result; that is not an error.
    """
    if not (0.0 < tol <= 1e-6):
        raise ValueError("bad tolerance: tol must lie in (0, 1e-6]")
    m, M = occupied_extremes(dist)
    if m == M:
        return OrthogonalityResult((), (), None, False)

    coords = derive_coordinates(dist)
    x, u, w = coords.x, coords.u, coords.w
    p1, p2, p3, p4, p5, p6 = dist.p

    candidates: list[float] = [math.pi]
    # closed-form candidates from the cosine quadratic
    try:
        for c in real1_cos_solutions(x, u):
            phi = math.acos(c)
            candidates.append(phi)
            candidates.append(TWO_PI - phi)
    except ValueError:
        pass
    # companion-matrix roots of the degree-trimmed polynomial
    coeffs = [p6, p5, p3 + p4, p2, p1]
    while coeffs and coeffs[0] <= ZERO_POPULATION:
        coeffs.pop(0)
    if len(coeffs) >= 2:
        for chi in np.roots(coeffs):
            if abs(abs(chi) - 1.0) < _UNIT_CIRCLE_TOL:
                phi0 = (-float(np.angle(chi))) % TWO_PI
                if phi0 == 0.0:
                    phi0 = TWO_PI
                candidates.append(_refine_candidate(dist, x, u, w, phi0))

    certified = []
    for phi in candidates:
        residual = abs(state_overlap(dist, phi))
        if residual < tol:
            certified.append((phi, residual))
    certified.sort()

    roots: list[float] = []
    residuals: list[float] = []
    for phi, residual in certified:
        if roots:
            gap = phi - roots[-1]
            merge = gap <= _DEDUPE_SPACING or (
                gap <= _BASIN_WIDTH
                and abs(state_overlap(dist, roots[-1] + 0.5 * gap)) < tol
            )
            if merge:
                if residual < residuals[-1]:
                    roots[-1], residuals[-1] = phi, residual
                continue
        roots.append(phi)
        residuals.append(residual)

    families = tuple(_family_tag(coords.y, coords.v, r, tol) for r in roots)
    return OrthogonalityResult(
        tuple(roots), families, roots[0] if roots else None, bool(roots)
    )
