"""Shared helpers: random state generators and the brute-force root oracle.

The oracle locates orthogonality phases independently of the polynomial
solver: a dense magnitude scan of the overlap over one period, followed by
golden-section refinement of each local minimum. Tests compare solver
output against it.
"""

import math

import numpy as np

from fermispeed.core import (
    RELATIVE_LEVELS,
    TWO_PI,
    ProbabilityDistribution,
    state_overlap,
)

SCAN_POINTS = 100_000

_PHI_GRID = np.linspace(TWO_PI / SCAN_POINTS, TWO_PI, SCAN_POINTS)
_PHASE_MATRIX = np.exp(-1j * np.outer(_PHI_GRID, np.array(RELATIVE_LEVELS)))


def random_distribution(rng) -> ProbabilityDistribution:
    """Flat Dirichlet draw on the full probability simplex."""
    return ProbabilityDistribution(tuple(rng.dirichlet(np.ones(6))))


def overlap_magnitudes(dist) -> np.ndarray:
    """|overlap| on the shared dense phase grid over (0, 2*pi]."""
    return np.abs(_PHASE_MATRIX @ np.asarray(dist.p))


def phase_grid() -> np.ndarray:
    return _PHI_GRID


def _golden_min(f, lo, hi, iters=90):
    inv = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv * (b - a)
    d = a + inv * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def scan_roots(dist, accept=1e-9, gate=1e-3):
    """Orthogonality phases located by scan plus golden-section refinement.

    Every true root pulls the overlap magnitude below ``gate`` at the
    nearest grid point (the slope is at most 7), so each below-gate local
    minimum is refined and kept if the refined magnitude certifies at
    ``accept``. Refined minima closer than 1e-6 collapse to one root.
    """
    mags = overlap_magnitudes(dist)
    candidates = np.where(
        (mags < gate)
        & (mags <= np.roll(mags, 1))
        & (mags <= np.roll(mags, -1))
    )[0]

    def magnitude(phi):
        return abs(state_overlap(dist, phi))

    step = TWO_PI / SCAN_POINTS
    roots = []
    for i in candidates:
        phi = _golden_min(magnitude, _PHI_GRID[i] - step, _PHI_GRID[i] + step)
        if magnitude(phi) < accept:
            if not roots or abs(phi - roots[-1]) > 1e-6:
                roots.append(float(phi))
    return sorted(roots)


def same_roots(solver_roots, oracle_roots, tol=1e-6) -> bool:
    """True when the two root sets match pairwise within tol."""
    if len(solver_roots) != len(oracle_roots):
        return False
    return all(abs(a - b) <= tol for a, b in zip(sorted(solver_roots), oracle_roots))
