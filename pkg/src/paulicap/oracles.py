"""Independent brute-force oracles for the closed-form results.

Every oracle works from the channel definition and the matrix primitives
only: entropies always come from numeric spectra, never from the piecewise
expressions under test, and nothing here calls into the capacity or bounds
modules except to fetch the value being checked.  All randomness is seeded
and folds deterministically, so identical seeds give identical reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import entanglement_breaking_test
from .capacities import classical_capacity, entanglement_assisted_capacity
from .channel import (
    ChannelParams,
    bloch_matrix,
    complement_matrix,
    kraus_operators,
    output_matrix,
    output_spectrum,
)
from .linalg import (
    apply_kraus_batch,
    complement_kraus,
    eigenvalues_hermitian_batch,
    entropy_from_spectrum,
)

ORACLE_TOLERANCES = {
    "closed_forms": 1e-12,
    "holevo_theta_grid": 1e-6,
    "holevo_random_ensembles": 1e-9,
    "mutual_info_grid": 1e-6,
    "pt_eigenvalues": 1e-10,
}


@dataclass(frozen=True)
class OracleReport:
    name: str
    samples: int
    max_abs_deviation: float
    passed: bool
    seed: int


def sample_params(rng: np.random.Generator, count: int) -> list:
    """Uniform parameter points on the triangle p0, p3 >= 0, p0 + p3 <= 1."""
    points = []
    for _ in range(count):
        u, v = rng.random(), rng.random()
        if u + v > 1.0:
            u, v = 1.0 - u, 1.0 - v
        points.append(ChannelParams(u, v))
    return points


def sample_bloch_points(rng: np.random.Generator, count: int, surface: bool = False):
    """Seeded Bloch points: uniform direction via (cos theta, phi), cube-root radius."""
    cos_t = rng.uniform(-1.0, 1.0, size=count)
    phi = rng.uniform(0.0, 2.0 * math.pi, size=count)
    radius = np.ones(count) if surface else rng.random(count) ** (1.0 / 3.0)
    sin_t = np.sqrt(np.clip(1.0 - cos_t * cos_t, 0.0, 1.0))
    x = radius * sin_t * np.cos(phi)
    y = radius * sin_t * np.sin(phi)
    z = radius * cos_t
    return x, y, z


def oracle_closed_forms(params: ChannelParams, n_states: int = 1000, seed: int = 0) -> OracleReport:
    """Check Kraus application against the printed closed forms.

    For seeded random Bloch states, compares the generic Kraus route with
    the closed-form channel output, the numeric output spectrum with its
    closed form, and the generic complement construction with the
    closed-form environment state.  Tolerance 1e-12 entrywise.
    """
    rng = np.random.default_rng(seed)
    x, y, z = sample_bloch_points(rng, n_states)
    rhos = bloch_matrix(x, y, z)
    kraus = kraus_operators(params)

    dev_output = np.max(np.abs(apply_kraus_batch(kraus, rhos) - output_matrix(params, x, y, z)))
    hi, lo = output_spectrum(params, x, y, z)
    numeric = eigenvalues_hermitian_batch(output_matrix(params, x, y, z))
    dev_spectrum = np.max(np.abs(numeric - np.stack([hi, lo], axis=-1)))
    dev_complement = np.max(
        np.abs(apply_kraus_batch(complement_kraus(kraus), rhos) - complement_matrix(params, x, y, z))
    )

    dev = float(max(dev_output, dev_spectrum, dev_complement))
    return OracleReport(
        name="closed_forms",
        samples=n_states,
        max_abs_deviation=dev,
        passed=dev <= ORACLE_TOLERANCES["closed_forms"],
        seed=seed,
    )


def oracle_holevo_classical(params: ChannelParams, theta_grid_size: int = 10_000) -> float:
    """Holevo quantity of the best antipodal pure-state pair, by brute force.

    Scans polar angles theta in [0, pi] on a uniform grid (Bloch vector
    (sin theta, 0, cos theta)) and returns 1 minus the smallest numeric
    output entropy; the ensemble average is I/2 by unitality, so this is the
    ensemble's Holevo quantity.
    """
    thetas = np.linspace(0.0, math.pi, theta_grid_size)
    outs = output_matrix(params, np.sin(thetas), 0.0, np.cos(thetas))
    entropies = np.asarray(entropy_from_spectrum(eigenvalues_hermitian_batch(outs)))
    return float(1.0 - entropies.min())


def oracle_holevo_random_ensembles(params: ChannelParams, n_ensembles: int = 200, seed: int = 0) -> float:
    """Largest output-ensemble Holevo quantity over random pure-state ensembles.

    Ensembles of 2 to 4 pure states with normalized uniform weights; the
    distribution only needs to probe widely, not be uniform in any precise
    sense.  Falsification contract: the result never exceeds the classical
    capacity.
    """
    rng = np.random.default_rng(seed)
    kraus = kraus_operators(params)
    best = -math.inf
    for _ in range(n_ensembles):
        m = int(rng.integers(2, 5))
        x, y, z = sample_bloch_points(rng, m, surface=True)
        weights = rng.random(m)
        weights = weights / weights.sum()
        outs = apply_kraus_batch(kraus, bloch_matrix(x, y, z))
        spectra = eigenvalues_hermitian_batch(outs)
        member_entropy = np.asarray(entropy_from_spectrum(spectra))
        avg = np.einsum("n,nij->ij", weights, outs)
        avg_entropy = float(entropy_from_spectrum(eigenvalues_hermitian_batch(avg)))
        best = max(best, avg_entropy - float(weights @ member_entropy))
    return best


def oracle_mutual_info_grid(params: ChannelParams, grid_size: int = 201) -> tuple:
    """Grid maximum of the mutual information over the (r, z) half disc.

    Entropies of the input, output and environment states are all computed
    from numeric spectra.  Returns (max value, (r, z) argmax); the first
    maximum in r-major order wins ties.
    """
    rs = np.linspace(0.0, 1.0, grid_size)
    zs = np.linspace(-1.0, 1.0, grid_size)
    rr, zz = np.meshgrid(rs, zs, indexing="ij")
    mask = rr * rr + zz * zz <= 1.0
    rf, zf = rr[mask], zz[mask]
    s_in = np.asarray(entropy_from_spectrum(eigenvalues_hermitian_batch(bloch_matrix(rf, 0.0, zf))))
    s_out = np.asarray(
        entropy_from_spectrum(eigenvalues_hermitian_batch(output_matrix(params, rf, 0.0, zf)))
    )
    s_env = np.asarray(
        entropy_from_spectrum(eigenvalues_hermitian_batch(complement_matrix(params, rf, 0.0, zf)))
    )
    info = s_in + s_out - s_env
    k = int(np.argmax(info))
    return float(info[k]), (float(rf[k]), float(zf[k]))


def oracle_pt_eigenvalues(grid_size: int = 201) -> OracleReport:
    """Numeric partial-transpose spectra versus the closed-form multiset, on a grid.

    Walks the full parameter triangle; entanglement_breaking_test already
    raises if the numeric and closed-form spectra drift apart, so the
    deviation recorded here is the worst match it observed.
    """
    worst = 0.0
    count = 0
    for i in range(grid_size):
        p0 = i / (grid_size - 1)
        for j in range(grid_size - i):
            p3 = j / (grid_size - 1)
            params = ChannelParams(p0, p3)
            _, eigs = entanglement_breaking_test(params)
            s = params.p0 + params.p3
            expected = -np.sort(
                -np.array([s, s, 1.0 - 2.0 * params.p3, 1.0 - 2.0 * params.p0])
            )
            worst = max(worst, float(np.max(np.abs(eigs - expected))))
            count += 1
    return OracleReport(
        name="pt_eigenvalues",
        samples=count,
        max_abs_deviation=worst,
        passed=worst <= ORACLE_TOLERANCES["pt_eigenvalues"],
        seed=0,
    )


def run_all_oracles(seed: int = 1, samples: int = 50) -> list:
    """Run every oracle against the closed-form results; one report each."""
    rng = np.random.default_rng(seed)
    params = sample_params(rng, samples)
    sub_seeds = [int(s) for s in rng.integers(0, 2**31 - 1, size=samples)]

    closed_dev = 0.0
    for point, sub in zip(params, sub_seeds):
        closed_dev = max(closed_dev, oracle_closed_forms(point, 1000, seed=sub).max_abs_deviation)
    reports = [
        OracleReport(
            name="closed_forms",
            samples=samples * 1000,
            max_abs_deviation=closed_dev,
            passed=closed_dev <= ORACLE_TOLERANCES["closed_forms"],
            seed=seed,
        )
    ]

    holevo_dev = 0.0
    for point in params:
        holevo_dev = max(
            holevo_dev, abs(classical_capacity(point).value - oracle_holevo_classical(point))
        )
    reports.append(
        OracleReport(
            name="holevo_theta_grid",
            samples=samples,
            max_abs_deviation=holevo_dev,
            passed=holevo_dev <= ORACLE_TOLERANCES["holevo_theta_grid"],
            seed=seed,
        )
    )

    violation = 0.0
    for point, sub in zip(params, sub_seeds):
        chi = oracle_holevo_random_ensembles(point, 200, seed=sub)
        violation = max(violation, chi - classical_capacity(point).value)
    violation = max(violation, 0.0)
    reports.append(
        OracleReport(
            name="holevo_random_ensembles",
            samples=samples * 200,
            max_abs_deviation=violation,
            passed=violation <= ORACLE_TOLERANCES["holevo_random_ensembles"],
            seed=seed,
        )
    )

    mi_points = params[: min(20, len(params))]
    mi_dev = 0.0
    spacing = max(1.0 / 200.0, 2.0 / 200.0)
    for point in mi_points:
        value, (r, z) = oracle_mutual_info_grid(point)
        dev = abs(value - entanglement_assisted_capacity(point))
        argmax_excess = max(0.0, math.hypot(r, z) - spacing)
        mi_dev = max(mi_dev, dev, argmax_excess)
    reports.append(
        OracleReport(
            name="mutual_info_grid",
            samples=len(mi_points),
            max_abs_deviation=mi_dev,
            passed=mi_dev <= ORACLE_TOLERANCES["mutual_info_grid"],
            seed=seed,
        )
    )

    reports.append(oracle_pt_eigenvalues(201))
    return reports
