"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
lines. Tolerances are fixed here, not calibrated.
"""

import math

import numpy as np
import pytest
from scipy import stats

from conftest import random_distribution, same_roots, scan_roots

from fermispeed.core import (
    PhasePair,
    ProbabilityDistribution,
    TwoFermionState,
    derive_coordinates,
    state_overlap,
)
from fermispeed.dynamics import survival_series
from fermispeed.entanglement import (
    concurrence_from_coefficients,
    concurrence_squared,
    concurrence_squared_grid,
)
from fermispeed.orthogonality import real_root_times, solve_orthogonality
from fermispeed.sampler import (
    class_spec,
    run_scatter_study,
    sample_family_I,
    sample_family_II,
)
from fermispeed.speedlimit import speed_limit

PI = math.pi
TWO_PI = 2 * math.pi


def _check(num: int, description: str, ok: bool) -> None:
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'} {description}")
    assert ok, f"criterion {num}: {description}"


@pytest.fixture(scope="module")
def mixed_family_pool():
    """>= 10^4 reachable distributions, families I and II mixed."""
    pool = sample_family_I(1001, 5000)
    pool += sample_family_II(1002, 4000)
    pool += sample_family_II(1003, 1000, force_y_zero=True)
    solved = [(d, solve_orthogonality(d), speed_limit(d)) for d in pool]
    return solved


def test_criterion_01_worked_example_times():
    tol = 1e-9
    uniform = solve_orthogonality(ProbabilityDistribution.uniform())
    energy = solve_orthogonality(ProbabilityDistribution.equiprobable_energy())
    qubit_dist = ProbabilityDistribution.two_level(1, 6)
    qubit = solve_orthogonality(qubit_dist)
    ratio = qubit.phi_1 / speed_limit(qubit_dist).tau_qsl
    ok = (
        abs(uniform.phi_1 - PI / 2) < tol
        and abs(energy.phi_1 - 2 * PI / 5) < tol
        and abs(qubit.phi_1 - PI / 4) < tol
        and abs(ratio - 1.0) < tol
    )
    _check(
        1,
        "first orthogonality phases: uniform pi/2, equiprobable-energy 2pi/5, "
        "extreme qubit pi/4 with ratio 1",
        ok,
    )


def test_criterion_02_speed_limit_values():
    tol = 1e-12
    ok = (
        abs(
            speed_limit(ProbabilityDistribution.uniform()).tau_qsl
            - (PI / 2) * math.sqrt(3 / 5)
        )
        < tol
        and abs(
            speed_limit(ProbabilityDistribution.equiprobable_energy()).tau_qsl
            - PI / (2 * math.sqrt(2))
        )
        < tol
    )
    for i in range(1, 7):
        for j in range(i + 1, 7):
            if (i, j) == (3, 4):
                continue
            report = speed_limit(ProbabilityDistribution.two_level(i, j))
            ok = ok and abs(
                report.tau_qsl - PI / (report.M_index - report.m_index)
            ) < tol
    _check(
        2,
        "speed limits: (pi/2)sqrt(3/5) uniform, pi/(2 sqrt 2) equiprobable-energy, "
        "pi/(M-m) for every half-half qubit",
        ok,
    )


def test_criterion_03_first_root_bound(mixed_family_pool):
    ok = len(mixed_family_pool) >= 10_000
    for _, result, _ in mixed_family_pool:
        ok = ok and result.reachable
        ok = ok and (PI / 4 - 1e-9 <= result.phi_1 <= PI + 1e-9)
    # saturation: x=1, u=0 attains pi/4; the u=1/2 family attains pi
    qubit = solve_orthogonality(ProbabilityDistribution.two_level(1, 6))
    ok = ok and abs(qubit.phi_1 - PI / 4) < 1e-9
    family_i_firsts = [
        result.phi_1 for d, result, _ in mixed_family_pool[:5000]
    ]
    ok = ok and all(abs(phi - PI) < 1e-9 for phi in family_i_firsts)
    _check(
        3,
        "first root within [pi/4, pi] over 10^4 mixed samples; both ends attained",
        ok,
    )


def test_criterion_04_real_root_family():
    ok = True
    for d in sample_family_I(1004, 1000):
        roots = solve_orthogonality(d).roots
        ok = ok and min(abs(r - PI) for r in roots) < 1e-6
        ok = ok and abs(derive_coordinates(d).u - 0.5) < 1e-9
        ok = ok and bool(real_root_times(d))
    rng = np.random.default_rng(1005)
    count = 0
    while count < 1000:
        d = random_distribution(rng)
        if abs(derive_coordinates(d).u - 0.5) < 1e-6:
            continue
        count += 1
        result = solve_orthogonality(d)
        if result.reachable:
            ok = ok and min(abs(r - PI) for r in result.roots) > 1e-6
        ok = ok and real_root_times(d) == ()
    _check(
        4,
        "u = 1/2 family always contains the pi root; u != 1/2 never does",
        ok,
    )


def test_criterion_05_qubit_characterization():
    ok = True
    for i in range(1, 7):
        for j in range(i + 1, 7):
            degenerate = (i, j) == (3, 4)
            for k in range(1, 1000):
                q = k / 1000.0
                reachable = solve_orthogonality(
                    ProbabilityDistribution.two_level(i, j, q)
                ).reachable
                expected = (not degenerate) and k == 500
                ok = ok and (reachable == expected)
    _check(
        5,
        "two-point states reach orthogonality exactly at q = 1/2 on distinct "
        "energies (15 pairs, 10^-3 grid)",
        ok,
    )


def test_criterion_06_concurrence_extremes_and_agreement():
    uniform = ProbabilityDistribution.uniform()
    at_max = concurrence_squared(uniform, PhasePair(PI, 0.0)).c_squared
    at_min = concurrence_squared(uniform, PhasePair(5 * PI / 3, 4 * PI / 3)).c_squared
    angles = np.linspace(0.0, TWO_PI, 400, endpoint=False)
    grid = concurrence_squared_grid(uniform, angles[:, None], angles[None, :])
    ok = at_max >= 1 - 1e-3 and at_min <= 1e-3
    ok = ok and grid.max() > 1 - 1e-3 and grid.min() < 1e-3
    rng = np.random.default_rng(1006)
    for _ in range(10_000):
        d = random_distribution(rng)
        pair = PhasePair(rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI))
        via_populations = concurrence_squared(d, pair).c_squared
        state = TwoFermionState.from_phase_pair(d, pair)
        via_coefficients = concurrence_from_coefficients(
            state.slater_coefficients()
        ).c_squared
        ok = ok and abs(via_populations - via_coefficients) < 1e-10
    _check(
        6,
        "concurrence extremes at (pi,0) and (5pi/3,4pi/3); both routes agree "
        "to 1e-10 on 10^4 states",
        ok,
    )


def test_criterion_07_survival_details():
    uniform = ProbabilityDistribution.uniform()
    window = np.linspace(PI / 2, 2 * PI / 3, 20001)
    peak = float(np.max(np.abs(state_overlap(uniform, window)) ** 2))
    ok = 0.0010 <= peak <= 0.0025
    reference = survival_series(ProbabilityDistribution.equiprobable_energy(0.0), TWO_PI, 2048)
    for p3 in (0.05, 0.1, 0.2):
        series = survival_series(ProbabilityDistribution.equiprobable_energy(p3), TWO_PI, 2048)
        ok = ok and float(np.max(np.abs(series.values - reference.values))) < 1e-12
    rng = np.random.default_rng(1007)
    for _ in range(1000):
        d = random_distribution(rng)
        ok = ok and abs(abs(state_overlap(d, TWO_PI)) ** 2 - 1.0) < 1e-12
    _check(
        7,
        "uniform survival peak in [0.0010, 0.0025] on [pi/2, 2pi/3]; split "
        "invariance; full revival at 2pi",
        ok,
    )


def test_criterion_08_speed_limit_inequality(mixed_family_pool):
    ok = all(
        result.phi_1 >= report.tau_qsl - 1e-9
        for _, result, report in mixed_family_pool
    )
    _check(8, "tau_1 >= tau_qsl on every sampled reachable distribution", ok)


def test_criterion_09_scatter_tendencies():
    def spearman(records):
        return stats.spearmanr(
            [r.c_squared for r in records], [r.ratio for r in records]
        ).statistic

    rho_a = spearman(run_scatter_study(class_spec("a", 10_000, 5)))
    rho_b = spearman(run_scatter_study(class_spec("b", 10_000, 5)))
    rho_rand = spearman(run_scatter_study(class_spec("rand", 10_000, 5)))
    ok = rho_a > 0 and rho_b < 0 and abs(rho_rand) < 0.1
    _check(
        9,
        f"scatter tendencies: class a rho={rho_a:+.3f} > 0, class b "
        f"rho={rho_b:+.3f} < 0, random-phase control |rho|={abs(rho_rand):.3f} < 0.1",
        ok,
    )


def test_criterion_10_oracle_equivalence():
    rng = np.random.default_rng(1008)
    pool = [
        ProbabilityDistribution.uniform(),
        ProbabilityDistribution.equiprobable_energy(),
        ProbabilityDistribution.two_level(1, 6),
    ]
    pool += [random_distribution(rng) for _ in range(397)]
    pool += sample_family_I(1009, 250)
    pool += sample_family_II(1010, 250)
    pool += sample_family_II(1011, 100, force_y_zero=True)
    ok = len(pool) == 1000
    for d in pool:
        solver = solve_orthogonality(d).roots
        oracle = scan_roots(d)
        ok = ok and same_roots(solver, oracle, tol=1e-6)
    _check(
        10,
        "polynomial solver and 10^5-point scan oracle find the same roots on "
        "10^3 distributions",
        ok,
    )
