"""Quantum-capacity bounds and zero-capacity region classification.

Upper bounds come from degradable flag extensions of the channel's two
convex decompositions (identity/Z mixture plus XY mixture, and identity/X
mixture plus Y/Z mixture), capped by the classical capacity.  The lower
bound is the single-shot coherent information maximized numerically over
the (r, z) half disc.  Entanglement breaking is decided by the
partial-transpose test on the Choi matrix, anti-degradability by a
Choi-moment criterion; either one forces zero quantum capacity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .capacities import classical_capacity
from .channel import (
    PAULI_I,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    ChannelParams,
    complement_matrix,
    kraus_operators,
    output_spectrum,
)
from .errors import DomainError
from .linalg import (
    KrausSet,
    binary_entropy,
    choi_matrix,
    complement_kraus,
    eigenvalues_hermitian,
    eigenvalues_hermitian_batch,
    entropy_from_spectrum,
    partial_transpose,
)

EB_EIGENVALUE_FLOOR = -1e-10
AD_MARGIN_TOL = 1e-12
_FEASIBLE_ATOL = 1e-12


@dataclass(frozen=True)
class OptimizerConfig:
    """Grid plus pattern-search settings for the coherent-information maximizer."""

    grid_resolution: int = 201
    refine_tolerance: float = 1e-9
    refine_max_iterations: int = 10_000


@dataclass(frozen=True)
class RegionFlags:
    """Zero-capacity classification at one parameter point.

    ad_margin is the closed-form anti-degradability margin; nonpositive
    means anti-degradable.
    """

    entanglement_breaking: bool
    antidegradable: bool
    pt_eigenvalues: tuple
    ad_margin: float


@dataclass(frozen=True)
class SingleShotResult:
    """Outcome of the coherent-information maximization.

    ``value`` is clamped at zero (capacities are nonnegative); ``unclamped``
    keeps the raw maximum, which is negative inside the anti-degradable
    region, and (r, z) is the argmax of the unclamped objective.
    """

    value: float
    r: float
    z: float
    unclamped: float


@dataclass(frozen=True)
class SubchannelDegradability:
    """Degradability flags for the four convex-decomposition subchannels.

    ``iz`` is the identity/Z mixture, ``xy`` the balanced X/Y mixture,
    ``ix`` the identity/X mixture, ``yz`` the Y/Z mixture.  None marks a
    subchannel whose convex weight vanishes at this parameter point.
    """

    iz: bool | None
    xy: bool | None
    ix: bool | None
    yz: bool | None


@dataclass(frozen=True)
class QuantumCapacityBounds:
    """Upper and lower quantum-capacity bounds at one parameter point."""

    upper_a: float
    upper_b: float
    classical_upper: float
    best_upper: float
    best_upper_source: str
    lower_single_shot: float
    lower_argmax: tuple
    capacity_known_zero: bool


def entanglement_breaking_test(params: ChannelParams) -> tuple:
    """Partial-transpose (Peres) test on the channel's Choi matrix.

    Returns the EB flag and the four numeric partial-transpose eigenvalues
    in descending order.  The numeric spectrum is cross-checked against the
    closed-form multiset {p0+p3, p0+p3, 1-2 p3, 1-2 p0}.
    """
    j = choi_matrix(kraus_operators(params))
    eigs = eigenvalues_hermitian(partial_transpose(j))
    s = params.p0 + params.p3
    expected = -np.sort(-np.array([s, s, 1.0 - 2.0 * params.p3, 1.0 - 2.0 * params.p0]))
    if float(np.max(np.abs(eigs - expected))) > 1e-10:
        raise RuntimeError(
            "partial-transpose spectrum deviates from its closed form; channel construction is inconsistent"
        )
    return bool(eigs.min() >= EB_EIGENVALUE_FLOOR), eigs


def choi_antidegradability_margin(kraus: KrausSet) -> float:
    """tr(J^2) - 4 sqrt(det J) - tr(Lambda(I)^2) for a qubit-input channel.

    Nonpositive means anti-degradable.  Uses the trace-2 Choi normalization;
    the criterion is not scale invariant.
    """
    j = choi_matrix(kraus)
    tr_j2 = float(np.sum(np.abs(j) ** 2))
    det = float(np.prod(eigenvalues_hermitian_batch(j)))
    lam_id = np.einsum("aij,akj->ik", kraus.stack, kraus.stack.conj())
    rhs = float(np.sum(np.abs(lam_id) ** 2))
    return tr_j2 - 4.0 * math.sqrt(max(det, 0.0)) - rhs


def _closed_form_ad_margin(params: ChannelParams) -> float:
    w = 2.0 * params.p1
    return (
        2.0 * (params.p0**2 + params.p3**2)
        + w * w
        - 4.0 * w * math.sqrt(params.p0 * params.p3)
        - 1.0
    )


def antidegradability_test(params: ChannelParams) -> tuple:
    """Closed-form anti-degradability margin; nonpositive means anti-degradable.

    The same decision is recomputed from the Choi-moment criterion as a
    consistency guard; the two must agree.
    """
    margin = _closed_form_ad_margin(params)
    antideg = margin <= AD_MARGIN_TOL
    general = choi_antidegradability_margin(kraus_operators(params)) <= AD_MARGIN_TOL
    if antideg != general:
        raise RuntimeError("closed-form and Choi-moment anti-degradability criteria disagree")
    return antideg, margin


def region_flags(params: ChannelParams) -> RegionFlags:
    """Combined entanglement-breaking and anti-degradability classification."""
    eb, pt = entanglement_breaking_test(params)
    ad, margin = antidegradability_test(params)
    return RegionFlags(
        entanglement_breaking=eb,
        antidegradable=ad,
        pt_eigenvalues=tuple(float(v) for v in pt),
        ad_margin=margin,
    )


def flag_bound_A(params: ChannelParams) -> float:
    """Flag-extension bound from the (identity/Z, XY) decomposition.

    Weight times the dephasing-part capacity, (p0+p3)(1 - h(p0/(p0+p3))),
    with the weight-zero slice contributing 0 by convention.
    """
    s = params.p0 + params.p3
    if s <= 0.0:
        return 0.0
    return s * (1.0 - binary_entropy(params.p0 / s))


def flag_bound_B(params: ChannelParams) -> float:
    """Flag-extension bound from the (identity/X, Y/Z) decomposition."""

    def term(weight: float, part: float) -> float:
        if weight <= 0.0:
            return 0.0
        return weight * (1.0 - binary_entropy(part / weight))

    return term(params.p0 + params.p1, params.p1) + term(params.p1 + params.p3, params.p1)


def best_quantum_upper_bound(params: ChannelParams) -> tuple:
    """min{A, B, C_cl} with deterministic tie-breaking (A, then Ccl, then B)."""
    best, source = flag_bound_A(params), "A"
    c_cl = classical_capacity(params).value
    if c_cl < best:
        best, source = c_cl, "Ccl"
    b = flag_bound_B(params)
    if b < best:
        best, source = b, "B"
    return best, source


def private_capacity_upper(params: ChannelParams) -> float:
    """Private-capacity upper bound (the flag bound from the identity/Z decomposition)."""
    return flag_bound_A(params)


def subchannel_degradability_check(params: ChannelParams) -> SubchannelDegradability:
    """Degradability of the four decomposition subchannels via their complements.

    A subchannel is degradable exactly when its complementary channel is
    anti-degradable, so the Choi-moment margin of each complement decides.
    The construction makes every margin a negated square, so all four come
    back True at every valid parameter point; this is a regression guard on
    the machinery, not a variable outcome.
    """
    p0, p1, p3 = params.p0, params.p1, params.p3

    def mixture(wa: float, op_a, wb: float, op_b) -> bool | None:
        total = wa + wb
        if total <= 0.0:
            return None
        kset = KrausSet.from_operators(
            [math.sqrt(wa / total) * op_a, math.sqrt(wb / total) * op_b]
        )
        return choi_antidegradability_margin(complement_kraus(kset)) <= AD_MARGIN_TOL

    return SubchannelDegradability(
        iz=mixture(p0, PAULI_I, p3, PAULI_Z),
        xy=mixture(0.5, PAULI_X, 0.5, PAULI_Y) if p1 > 0.0 else None,
        ix=mixture(p0, PAULI_I, p1, PAULI_X),
        yz=mixture(p1, PAULI_Y, p3, PAULI_Z),
    )


def _coherent_information_values(params: ChannelParams, rs: np.ndarray, zs: np.ndarray) -> np.ndarray:
    hi, lo = output_spectrum(params, rs, 0.0, zs)
    out_entropy = np.asarray(entropy_from_spectrum(np.stack([hi, lo], axis=-1)))
    env = eigenvalues_hermitian_batch(complement_matrix(params, rs, 0.0, zs))
    return out_entropy - np.asarray(entropy_from_spectrum(env))


def coherent_information(params: ChannelParams, r: float, z: float) -> float:
    """S(Lambda(rho)) - S(Lambda^c(rho)) in bits at the Bloch point (r, 0, z).

    Restricting to the xz half plane loses nothing: both output spectra
    depend on the transverse coordinates only through r.  Output eigenvalues
    come from the closed form, environment eigenvalues from the numeric 4x4
    spectrum.
    """
    r, z = float(r), float(z)
    if r < -_FEASIBLE_ATOL or abs(z) > 1.0 + _FEASIBLE_ATOL or r * r + z * z > 1.0 + _FEASIBLE_ATOL:
        raise DomainError(f"(r, z) = ({r!r}, {z!r}) lies outside the Bloch half disc")
    r = max(r, 0.0)
    return float(_coherent_information_values(params, np.array([r]), np.array([z]))[0])


def single_shot_quantum_capacity(
    params: ChannelParams, config: OptimizerConfig | None = None
) -> SingleShotResult:
    """Maximize the coherent information over the Bloch half disc.

    Deterministic two-stage search: a dense feasibility-masked grid over
    r in [0, 1], z in [-1, 1] seeds a compass pattern search whose steps
    start at the grid spacing and halve on failure until they drop below the
    refinement tolerance.  Grid ties keep the smallest r, then the smallest
    z; the pattern search only moves on strict improvement, so repeated runs
    with the same config are bit-identical.
    """
    cfg = config or OptimizerConfig()
    n = int(cfg.grid_resolution)
    if n < 2:
        raise DomainError(f"grid_resolution must be >= 2, got {n}")
    rs = np.linspace(0.0, 1.0, n)
    zs = np.linspace(-1.0, 1.0, n)
    rr, zz = np.meshgrid(rs, zs, indexing="ij")
    mask = rr * rr + zz * zz <= 1.0
    rf, zf = rr[mask], zz[mask]
    vals = _coherent_information_values(params, rf, zf)
    k = int(np.argmax(vals))
    best_r, best_z, best_v = float(rf[k]), float(zf[k]), float(vals[k])

    step_r = 1.0 / (n - 1)
    step_z = 2.0 / (n - 1)
    iterations = 0
    while max(step_r, step_z) >= cfg.refine_tolerance and iterations < cfg.refine_max_iterations:
        cand_r, cand_z = [], []
        for pr, pz in (
            (best_r + step_r, best_z),
            (best_r - step_r, best_z),
            (best_r, best_z + step_z),
            (best_r, best_z - step_z),
        ):
            if 0.0 <= pr <= 1.0 and -1.0 <= pz <= 1.0 and pr * pr + pz * pz <= 1.0:
                cand_r.append(pr)
                cand_z.append(pz)
        moved = False
        if cand_r:
            pv = _coherent_information_values(params, np.array(cand_r), np.array(cand_z))
            j = int(np.argmax(pv))
            if float(pv[j]) > best_v:
                best_r, best_z, best_v = cand_r[j], cand_z[j], float(pv[j])
                moved = True
        if not moved:
            step_r *= 0.5
            step_z *= 0.5
        iterations += 1
    return SingleShotResult(value=max(best_v, 0.0), r=best_r, z=best_z, unclamped=best_v)


def quantum_capacity_interval(
    params: ChannelParams, config: OptimizerConfig | None = None
) -> QuantumCapacityBounds:
    """All quantum-capacity bounds at one parameter point.

    capacity_known_zero is keyed on anti-degradability, which covers the
    entanglement-breaking square; when set, the reported lower bound is
    exactly zero while the upper bounds stay as computed.
    """
    upper_a = flag_bound_A(params)
    upper_b = flag_bound_B(params)
    classical_upper = classical_capacity(params).value
    best_upper, source = best_quantum_upper_bound(params)
    shot = single_shot_quantum_capacity(params, config)
    known_zero, _ = antidegradability_test(params)
    return QuantumCapacityBounds(
        upper_a=upper_a,
        upper_b=upper_b,
        classical_upper=classical_upper,
        best_upper=best_upper,
        best_upper_source=source,
        lower_single_shot=0.0 if known_zero else shot.value,
        lower_argmax=(shot.r, shot.z),
        capacity_known_zero=known_zero,
    )


def classical_equals_A_boundary(total: float, tol: float = 1e-10) -> float | None:
    """Asymmetry where the classical capacity crosses flag bound A at fixed p0 + p3.

    Bisection over the asymmetry in [0, 1]; the p3 >= p0 half of the plane
    is its mirror image.  Returns None when the two bounds never cross on
    the slice.
    """
    if not 0.0 < total <= 1.0 + 1e-12:
        raise DomainError(f"p0 + p3 must lie in (0, 1], got {total!r}")
    total = min(float(total), 1.0)

    def gap(eps: float) -> float:
        point = ChannelParams.from_sum_asymmetry(total, eps)
        return flag_bound_A(point) - classical_capacity(point).value

    return _bisect_root(gap, tol)


def antidegradability_boundary(total: float, tol: float = 1e-12) -> float | None:
    """Asymmetry where the anti-degradability margin crosses zero at fixed p0 + p3.

    The margin is increasing in the asymmetry at fixed p0 + p3, so a simple
    bisection on [0, 1] finds the region boundary; None means the whole
    slice is anti-degradable or none of it is.
    """
    if not 0.0 < total <= 1.0 + 1e-12:
        raise DomainError(f"p0 + p3 must lie in (0, 1], got {total!r}")
    total = min(float(total), 1.0)

    def margin(eps: float) -> float:
        return _closed_form_ad_margin(ChannelParams.from_sum_asymmetry(total, eps))

    return _bisect_root(margin, tol)


def _bisect_root(fn, tol: float) -> float | None:
    lo, hi = 0.0, 1.0
    g_lo, g_hi = fn(lo), fn(hi)
    if g_lo == 0.0:
        return 0.0
    if g_hi == 0.0:
        return 1.0
    if (g_lo > 0.0) == (g_hi > 0.0):
        return None
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        g_mid = fn(mid)
        if g_mid == 0.0:
            return mid
        if (g_mid > 0.0) == (g_hi > 0.0):
            hi, g_hi = mid, g_mid
        else:
            lo, g_lo = mid, g_mid
    return 0.5 * (lo + hi)
