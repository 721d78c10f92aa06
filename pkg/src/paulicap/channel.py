"""The rotation-covariant two-parameter Pauli qubit channel.

The family is Lambda(rho) = p0 rho + p1 (X rho X + Y rho Y) + p3 Z rho Z
with p0 + 2 p1 + p3 = 1, i.e. the Pauli channels whose X and Y weights
coincide.  These channels commute with every rotation about the z axis,
which is what makes closed-form capacity results possible.  This module
holds the parameterization, the canonical Kraus sets, closed-form outputs
for the channel and its complement, and residual checks for each symmetry
the rest of the package relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError
from .linalg import KrausSet, apply_kraus_batch, complement_kraus, frobenius_norm

PAULI_I = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)

_PARAM_ATOL = 1e-12
_BLOCH_ATOL = 1e-12

# Conjugating each canonical Kraus operator maps the set to itself up to the
# sign of the Y term, which this diagonal matrix tracks.
CONJUGATION_SIGNS = np.diag([1.0, 1.0, -1.0, 1.0]).astype(np.complex128)


@dataclass(frozen=True)
class ChannelParams:
    """Channel point (p0, p3); p1 = p2 = (1 - p0 - p3)/2 is derived.

    Values within 1e-12 of the probability simplex are snapped onto it so
    square roots and logarithms downstream always see valid probabilities.
    """

    p0: float
    p3: float

    def __post_init__(self):
        p0, p3 = float(self.p0), float(self.p3)
        if not (math.isfinite(p0) and math.isfinite(p3)):
            raise ValidationError(f"channel parameters must be finite, got p0={p0!r}, p3={p3!r}")
        if p0 < -_PARAM_ATOL:
            raise ValidationError(f"p0 must be >= 0, got {p0!r}")
        if p3 < -_PARAM_ATOL:
            raise ValidationError(f"p3 must be >= 0, got {p3!r}")
        if p0 + p3 > 1.0 + _PARAM_ATOL:
            raise ValidationError(f"p0 + p3 must be <= 1, got {p0 + p3!r}")
        p0 = min(max(p0, 0.0), 1.0)
        p3 = min(max(p3, 0.0), 1.0)
        if p0 + p3 > 1.0:
            p3 = 1.0 - p0
        object.__setattr__(self, "p0", p0)
        object.__setattr__(self, "p3", p3)

    @property
    def p1(self) -> float:
        return max(0.0, 0.5 * (1.0 - self.p0 - self.p3))

    @property
    def p2(self) -> float:
        return self.p1

    @property
    def probs(self) -> tuple:
        """Weights (p0, p1, p2, p3) of the I, X, Y, Z branches."""
        return (self.p0, self.p1, self.p1, self.p3)

    @property
    def epsilon(self) -> float:
        """Asymmetry (p0 - p3)/(p0 + p3); defined as 0 for the pure XY mixture."""
        s = self.p0 + self.p3
        return 0.0 if s == 0.0 else (self.p0 - self.p3) / s

    def swapped(self) -> "ChannelParams":
        return ChannelParams(self.p3, self.p0)

    @classmethod
    def from_sum_asymmetry(cls, total: float, asymmetry: float) -> "ChannelParams":
        """Build from s = p0 + p3 and the asymmetry (p0 - p3)/s."""
        if not -_PARAM_ATOL <= total <= 1.0 + _PARAM_ATOL:
            raise DomainError(f"p0 + p3 must lie in [0, 1], got {total!r}")
        if abs(asymmetry) > 1.0 + _PARAM_ATOL:
            raise DomainError(f"asymmetry must lie in [-1, 1], got {asymmetry!r}")
        total = min(max(float(total), 0.0), 1.0)
        asymmetry = min(max(float(asymmetry), -1.0), 1.0)
        return cls(0.5 * total * (1.0 + asymmetry), 0.5 * total * (1.0 - asymmetry))


@dataclass(frozen=True)
class BlochVector:
    """Qubit state coordinates (x, y, z) with x^2 + y^2 + z^2 <= 1."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        x, y, z = float(self.x), float(self.y), float(self.z)
        n2 = x * x + y * y + z * z
        if not math.isfinite(n2) or n2 > 1.0 + _BLOCH_ATOL:
            raise ValidationError(f"Bloch vector must satisfy x^2 + y^2 + z^2 <= 1, got norm^2 = {n2!r}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @property
    def r(self) -> float:
        """Transverse radius sqrt(x^2 + y^2)."""
        return math.hypot(self.x, self.y)

    @property
    def norm(self) -> float:
        return math.sqrt(self.x**2 + self.y**2 + self.z**2)

    def density_matrix(self) -> np.ndarray:
        return bloch_matrix(self.x, self.y, self.z)


def bloch_matrix(x, y, z) -> np.ndarray:
    """rho = (I + x X + y Y + z Z)/2, broadcasting over array coordinates."""
    x, y, z = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float), np.asarray(z, float))
    out = np.empty(x.shape + (2, 2), dtype=np.complex128)
    out[..., 0, 0] = 0.5 * (1.0 + z)
    out[..., 0, 1] = 0.5 * (x - 1j * y)
    out[..., 1, 0] = 0.5 * (x + 1j * y)
    out[..., 1, 1] = 0.5 * (1.0 - z)
    return out


def kraus_operators(params: ChannelParams) -> KrausSet:
    """Canonical ordered Kraus set [sqrt(p0) I, sqrt(p1) X, sqrt(p1) Y, sqrt(p3) Z].

    The order is fixed and documented because the complement construction
    depends on it; the closed-form complement matrices assume exactly this
    representative.
    """
    w0, w1 = math.sqrt(params.p0), math.sqrt(params.p1)
    w3 = math.sqrt(params.p3)
    return KrausSet.from_operators([w0 * PAULI_I, w1 * PAULI_X, w1 * PAULI_Y, w3 * PAULI_Z])


def output_matrix(params: ChannelParams, x, y, z) -> np.ndarray:
    """Closed-form channel output at Bloch coordinates (broadcasts over arrays)."""
    gap = params.p0 + params.p3 - 2.0 * params.p1
    coh = params.p0 - params.p3
    x, y, z = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float), np.asarray(z, float))
    out = np.empty(x.shape + (2, 2), dtype=np.complex128)
    out[..., 0, 0] = 0.5 * (1.0 + gap * z)
    out[..., 0, 1] = 0.5 * coh * (x - 1j * y)
    out[..., 1, 0] = 0.5 * coh * (x + 1j * y)
    out[..., 1, 1] = 0.5 * (1.0 - gap * z)
    return out


def output_spectrum(params: ChannelParams, x, y, z):
    """Closed-form output eigenvalues (1 +- g)/2, larger first (broadcasts)."""
    coh2 = (params.p0 - params.p3) ** 2
    gap2 = (2.0 * params.p0 + 2.0 * params.p3 - 1.0) ** 2
    x, y, z = (np.asarray(v, float) for v in (x, y, z))
    g = np.sqrt(np.clip(coh2 * (x * x + y * y) + gap2 * (z * z), 0.0, 1.0))
    return 0.5 * (1.0 + g), 0.5 * (1.0 - g)


def complement_matrix(params: ChannelParams, x, y, z) -> np.ndarray:
    """Closed-form complement output, a 4x4 environment state (broadcasts)."""
    p0, p1, p3 = params.p0, params.p1, params.p3
    a = math.sqrt(p0 * p1)
    b = math.sqrt(p0 * p3)
    c = math.sqrt(p1 * p3)
    x, y, z = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float), np.asarray(z, float))
    out = np.zeros(x.shape + (4, 4), dtype=np.complex128)
    out[..., 0, 0] = p0
    out[..., 1, 1] = p1
    out[..., 2, 2] = p1
    out[..., 3, 3] = p3
    out[..., 0, 1] = a * x
    out[..., 1, 0] = a * x
    out[..., 0, 2] = a * y
    out[..., 2, 0] = a * y
    out[..., 0, 3] = b * z
    out[..., 3, 0] = b * z
    out[..., 1, 2] = -1j * p1 * z
    out[..., 2, 1] = 1j * p1 * z
    out[..., 1, 3] = 1j * c * y
    out[..., 3, 1] = -1j * c * y
    out[..., 2, 3] = -1j * c * x
    out[..., 3, 2] = 1j * c * x
    return out


def channel_output(params: ChannelParams, state: BlochVector) -> np.ndarray:
    return output_matrix(params, state.x, state.y, state.z)


def channel_output_spectrum(params: ChannelParams, state: BlochVector) -> tuple:
    hi, lo = output_spectrum(params, state.x, state.y, state.z)
    return float(hi), float(lo)


def complement_output(params: ChannelParams, state: BlochVector) -> np.ndarray:
    return complement_matrix(params, state.x, state.y, state.z)


def rotation_z(theta: float) -> np.ndarray:
    """exp(i theta Z / 2) = diag(e^{i theta/2}, e^{-i theta/2})."""
    return np.diag([np.exp(0.5j * theta), np.exp(-0.5j * theta)])


def environment_rotation(theta: float) -> np.ndarray:
    """4x4 block rotation the environment picks up under a z rotation of the input."""
    c, s = math.cos(theta), math.sin(theta)
    om = np.eye(4, dtype=np.complex128)
    om[1, 1] = c
    om[1, 2] = -s
    om[2, 1] = s
    om[2, 2] = c
    return om


def verify_channel_covariance(params: ChannelParams, theta: float, state: BlochVector) -> float:
    """Residual of Lambda(U rho U^dag) = U Lambda(rho) U^dag for U = rotation_z(theta)."""
    k = kraus_operators(params)
    rho = state.density_matrix()
    u = rotation_z(theta)
    lhs = apply_kraus_batch(k, u @ rho @ u.conj().T)
    rhs = u @ apply_kraus_batch(k, rho) @ u.conj().T
    return frobenius_norm(lhs - rhs)


def verify_complement_covariance(params: ChannelParams, theta: float, state: BlochVector) -> float:
    """Residual of the covariance a z rotation induces on the complement.

    The complement output at the rotated Bloch point (x', y', z), where
    (x', y') are the coordinates of U rho U^dag, must equal
    Omega^dag Lambda^c(rho) Omega with Omega = environment_rotation(theta).
    """
    rc = complement_kraus(kraus_operators(params))
    xr = state.x * math.cos(theta) + state.y * math.sin(theta)
    yr = -state.x * math.sin(theta) + state.y * math.cos(theta)
    lhs = apply_kraus_batch(rc, bloch_matrix(xr, yr, state.z))
    om = environment_rotation(theta)
    rhs = om.conj().T @ apply_kraus_batch(rc, state.density_matrix()) @ om
    return frobenius_norm(lhs - rhs)


def verify_z2_exchange(params: ChannelParams, state: BlochVector) -> float:
    """Residual of Lambda_{p3,p0}(rho) = Z Lambda_{p0,p3}(rho) Z."""
    rho = state.density_matrix()
    lhs = apply_kraus_batch(kraus_operators(params.swapped()), rho)
    rhs = PAULI_Z @ apply_kraus_batch(kraus_operators(params), rho) @ PAULI_Z
    return frobenius_norm(lhs - rhs)


def verify_conjugation_property(params: ChannelParams, state: BlochVector) -> float:
    """Residual of the conjugation symmetry for the channel and its complement.

    Checks Lambda(rho*) = Lambda(rho)* and, with S = CONJUGATION_SIGNS
    tracking Y* = -Y in the canonical Kraus order, Lambda^c(rho*) =
    S^T Lambda^c(rho)* S*.  Returns the larger of the two Frobenius
    residuals.
    """
    k = kraus_operators(params)
    rc = complement_kraus(k)
    rho = state.density_matrix()
    rho_conj = rho.conj()
    res_channel = frobenius_norm(apply_kraus_batch(k, rho_conj) - apply_kraus_batch(k, rho).conj())
    s = CONJUGATION_SIGNS
    rhs = s.T @ apply_kraus_batch(rc, rho).conj() @ s.conj()
    res_complement = frobenius_norm(apply_kraus_batch(rc, rho_conj) - rhs)
    return max(res_channel, res_complement)
