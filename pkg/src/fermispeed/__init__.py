"""Quantum speed limits, orthogonality times and fermionic entanglement for
a pair of identical fermions on four equally spaced single-particle levels.

The two-particle space is six dimensional with energies (3, 4, 5, 5, 6, 7)
in units of the level spacing. All times are dimensionless phases
phi = epsilon * t / hbar (hbar = epsilon = 1).
"""

__version__ = "0.1.0"

from .core import (
    RELATIVE_LEVELS,
    SPECTRUM,
    DerivedCoordinates,
    InfeasibleCoordinatesError,
    PhasePair,
    ProbabilityDistribution,
    Spectrum,
    TwoFermionState,
    derive_coordinates,
    parse_distribution,
    restore_distribution,
    state_overlap,
)
from .dynamics import TimeSeries, survival_series
from .entanglement import (
    ConcurrenceValue,
    concurrence_from_coefficients,
    concurrence_squared,
)
from .mapper import (
    GridCell,
    GridMap,
    GridSpec,
    map_qsl_plane,
    map_xu_region,
    map_yv_region,
)
from .orthogonality import (
    OrthogonalityResult,
    branch_cos_value,
    classify_family,
    real1_cos_solutions,
    real_root_times,
    solve_orthogonality,
)
from .sampler import (
    ClassSpec,
    SampleRecord,
    SamplingStalledError,
    class_spec,
    phase_sweep_study,
    run_scatter_study,
    sample_family_I,
    sample_family_II,
)
from .speedlimit import (
    InfeasiblePlanePointError,
    SpeedLimitReport,
    occupied_extremes,
    qsl_from_plane,
    speed_limit,
)

__all__ = [
    "RELATIVE_LEVELS",
    "SPECTRUM",
    "ClassSpec",
    "ConcurrenceValue",
    "DerivedCoordinates",
    "GridCell",
    "GridMap",
    "GridSpec",
    "InfeasibleCoordinatesError",
    "InfeasiblePlanePointError",
    "OrthogonalityResult",
    "PhasePair",
    "ProbabilityDistribution",
    "SampleRecord",
    "SamplingStalledError",
    "SpeedLimitReport",
    "Spectrum",
    "TimeSeries",
    "TwoFermionState",
    "branch_cos_value",
    "class_spec",
    "classify_family",
    "concurrence_from_coefficients",
    "concurrence_squared",
    "derive_coordinates",
    "map_qsl_plane",
    "map_xu_region",
    "map_yv_region",
    "occupied_extremes",
    "parse_distribution",
    "phase_sweep_study",
    "qsl_from_plane",
    "real1_cos_solutions",
    "real_root_times",
    "restore_distribution",
    "run_scatter_study",
    "sample_family_I",
    "sample_family_II",
    "solve_orthogonality",
    "speed_limit",
    "state_overlap",
    "survival_series",
]
