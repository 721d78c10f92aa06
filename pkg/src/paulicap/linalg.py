"""Small dense complex linear algebra used by the capacity calculations.

Matrices are plain ``numpy.ndarray`` objects (complex128, row major).  The
only eigensolver in the package lives here: cyclic Jacobi sweeps for
Hermitian matrices, with a batched form so grid scans can diagonalize tens
of thousands of 4x4 matrices at once.  The dimensions in this package are
tiny (2 or 4), which keeps Jacobi simple and very robust.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    NotAStateError,
    UnsupportedDimensionError,
    ValidationError,
)

HERMITIAN_ATOL = 1e-12
TRACE_ATOL = 1e-12
EIGENVALUE_FLOOR = -1e-10
COMPLETENESS_ATOL = 1e-10
JACOBI_OFFDIAG_TOL = 1e-13
_MAX_JACOBI_SWEEPS = 60


def frobenius_norm(m) -> float:
    return float(np.linalg.norm(np.asarray(m)))


def as_square_matrix(m, name: str = "matrix") -> np.ndarray:
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValidationError(f"{name} must be a square matrix, got shape {arr.shape}")
    return arr


def check_hermitian(m, *, atol: float = HERMITIAN_ATOL, name: str = "matrix") -> np.ndarray:
    arr = as_square_matrix(m, name)
    dev = float(np.max(np.abs(arr - arr.conj().T)))
    if dev > atol:
        raise ValidationError(f"{name} is not Hermitian within {atol:g} (deviation {dev:g})")
    return arr


def _max_offdiag_sq(a: np.ndarray) -> float:
    # Summing the off-diagonal squares directly avoids the cancellation a
    # "total minus diagonal" formulation hits once the mass is tiny.
    abs_sq = np.abs(a) ** 2
    idx = np.arange(a.shape[-1])
    abs_sq[..., idx, idx] = 0.0
    return float(np.max(np.sum(abs_sq, axis=(-2, -1))))


def _rotate_batch(a: np.ndarray, p: int, q: int) -> None:
    """Zero the (p, q) entry of every matrix in the stack with a unitary rotation."""
    apq = a[:, p, q]
    mag = np.abs(apq)
    # Entries this small are already far below the convergence tolerance and
    # their phase division would overflow into NaNs on denormals.
    active = mag > 1e-150
    if not active.any():
        return
    phase = np.where(active, apq, 1.0) / np.where(active, mag, 1.0)
    app = a[:, p, p].real
    aqq = a[:, q, q].real
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        theta = (aqq - app) / (2.0 * mag)
        t = np.where(theta >= 0.0, 1.0, -1.0) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
    t = np.where(active & np.isfinite(t), t, 0.0)
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c

    cc = c[:, None]
    ss = s[:, None]
    ph = phase[:, None]

    col_p = a[:, :, p].copy()
    col_q = a[:, :, q].copy()
    a[:, :, p] = cc * col_p - ss * ph.conj() * col_q
    a[:, :, q] = ss * col_p + cc * ph.conj() * col_q

    row_p = a[:, p, :].copy()
    row_q = a[:, q, :].copy()
    a[:, p, :] = cc * row_p - ss * ph * row_q
    a[:, q, :] = ss * row_p + cc * ph * row_q

    a[:, p, q] = 0.0
    a[:, q, p] = 0.0


def eigenvalues_hermitian_batch(mats) -> np.ndarray:
    """Eigenvalues of a stack of Hermitian matrices, each sorted descending.

    Cyclic Jacobi sweeps run on the whole (..., d, d) stack at once until
    every matrix has off-diagonal Frobenius norm below JACOBI_OFFDIAG_TOL.
    Inputs are assumed Hermitian; use :func:`eigenvalues_hermitian` for the
    validated single-matrix form.
    """
    a = np.array(mats, dtype=np.complex128)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValidationError(f"expected a stack of square matrices, got shape {a.shape}")
    lead, d = a.shape[:-2], a.shape[-1]
    a = a.reshape(-1, d, d)
    if d == 1:
        return a[:, 0, 0].real.reshape(*lead, 1)
    pivots = [(p, q) for p in range(d - 1) for q in range(p + 1, d)]
    tol_sq = JACOBI_OFFDIAG_TOL**2
    for _ in range(_MAX_JACOBI_SWEEPS):
        if _max_offdiag_sq(a) <= tol_sq:
            break
        for p, q in pivots:
            _rotate_batch(a, p, q)
    else:
        if _max_offdiag_sq(a) > tol_sq:
            raise RuntimeError("Jacobi sweeps failed to converge")
    vals = np.diagonal(a, axis1=-2, axis2=-1).real
    vals = -np.sort(-vals, axis=-1)
    return vals.reshape(*lead, d)


def eigenvalues_hermitian(m) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, descending, by cyclic Jacobi sweeps."""
    arr = check_hermitian(m)
    return eigenvalues_hermitian_batch(arr)


def entropy_from_spectrum(eigenvalues):
    """Base-2 Shannon entropy over the last axis, with the 0 log 0 = 0 convention.

    Eigenvalues in [EIGENVALUE_FLOOR, 0) are treated as exact zeros; anything
    below the floor is rejected.  The result is clipped into the exact range
    [0, log2 d] to absorb rounding at pure and maximally mixed spectra.
    """
    lam = np.asarray(eigenvalues, dtype=float)
    low = float(lam.min())
    if low < EIGENVALUE_FLOOR:
        raise NotAStateError(f"eigenvalue {low:g} lies below {EIGENVALUE_FLOOR:g}; not a state spectrum")
    lam = np.clip(lam, 0.0, None)
    safe = np.where(lam > 0.0, lam, 1.0)
    s = -np.sum(lam * np.log2(safe), axis=-1)
    s = np.clip(s, 0.0, math.log2(lam.shape[-1]) if lam.shape[-1] > 1 else 0.0)
    return float(s) if s.ndim == 0 else s


def von_neumann_entropy(rho) -> float:
    """Von Neumann entropy of a density matrix, in bits."""
    arr = check_hermitian(rho, name="state")
    tr = float(arr.trace().real)
    if abs(tr - 1.0) > TRACE_ATOL:
        raise ValidationError(f"state trace must be 1 within {TRACE_ATOL:g}, got {tr!r}")
    return float(entropy_from_spectrum(eigenvalues_hermitian_batch(arr)))


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1 - x) log2 (1 - x), with h(0) = h(1) = 0 exactly."""
    if not -1e-12 <= x <= 1.0 + 1e-12:
        raise DomainError(f"binary entropy argument must lie in [0, 1], got {x!r}")
    x = min(max(float(x), 0.0), 1.0)
    if x == 0.0 or x == 1.0:
        return 0.0
    return -(x * math.log2(x) + (1.0 - x) * math.log2(1.0 - x))


@dataclass(frozen=True, eq=False)
class KrausSet:
    """Ordered Kraus operators of a completely positive trace-preserving map.

    The operator order is part of the value: the complement construction
    reads out matrix rows by position, so reordering the operators selects a
    different (isometrically equivalent) complement.
    """

    dim_in: int
    dim_out: int
    ops: tuple

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=np.complex128) for k in self.ops)
        if not ops:
            raise ValidationError("KrausSet needs at least one operator")
        for k in ops:
            if k.shape != (self.dim_out, self.dim_in):
                raise ValidationError(
                    f"Kraus operator shape {k.shape} does not match "
                    f"(dim_out, dim_in) = ({self.dim_out}, {self.dim_in})"
                )
        stack = np.stack(ops)
        total = np.einsum("aji,ajk->ik", stack.conj(), stack)
        dev = frobenius_norm(total - np.eye(self.dim_in))
        if dev > COMPLETENESS_ATOL:
            raise ValidationError(f"Kraus completeness violated: ||sum K^dag K - I||_F = {dev:g}")
        object.__setattr__(self, "ops", ops)
        object.__setattr__(self, "_stack", stack)

    @classmethod
    def from_operators(cls, ops) -> "KrausSet":
        mats = [np.asarray(k, dtype=np.complex128) for k in ops]
        if not mats:
            raise ValidationError("KrausSet needs at least one operator")
        if mats[0].ndim != 2:
            raise ValidationError(f"Kraus operators must be matrices, got shape {mats[0].shape}")
        dim_out, dim_in = mats[0].shape
        return cls(dim_in=int(dim_in), dim_out=int(dim_out), ops=tuple(mats))

    @property
    def stack(self) -> np.ndarray:
        """All operators as one (n_ops, dim_out, dim_in) array."""
        return self._stack

    def __len__(self) -> int:
        return len(self.ops)


def apply_kraus_batch(kraus: KrausSet, rhos) -> np.ndarray:
    """Unvalidated broadcasting form of :func:`apply_kraus` for (..., d, d) stacks."""
    rhos = np.asarray(rhos, dtype=np.complex128)
    return np.einsum("aij,...jk,alk->...il", kraus.stack, rhos, kraus.stack.conj(), optimize=True)


def apply_kraus(kraus: KrausSet, rho) -> np.ndarray:
    """Apply the channel, sum_a K_a rho K_a^dag, to a validated density matrix."""
    arr = check_hermitian(rho, name="state")
    if arr.shape[0] != kraus.dim_in:
        raise ValidationError(
            f"state dimension {arr.shape[0]} does not match channel input dimension {kraus.dim_in}"
        )
    tr = float(arr.trace().real)
    if abs(tr - 1.0) > TRACE_ATOL:
        raise ValidationError(f"state trace must be 1 within {TRACE_ATOL:g}, got {tr!r}")
    eigs = eigenvalues_hermitian_batch(arr)
    if float(eigs.min()) < EIGENVALUE_FLOOR:
        raise NotAStateError(f"state eigenvalue {float(eigs.min()):g} below {EIGENVALUE_FLOOR:g}")
    return apply_kraus_batch(kraus, arr)


def complement_kraus(kraus: KrausSet) -> KrausSet:
    """Kraus set of the complementary channel, (R_i)[a, j] = (K_a)[i, j].

    The result maps the input to the environment: one operator per output
    row of the original set, each of shape (number of original operators,
    dim_in).
    """
    stack = kraus.stack
    new_ops = tuple(np.array(stack[:, i, :]) for i in range(kraus.dim_out))
    return KrausSet(dim_in=kraus.dim_in, dim_out=stack.shape[0], ops=new_ops)


def choi_matrix(kraus: KrausSet) -> np.ndarray:
    """Choi matrix of a qubit-input channel, normalized to trace 2.

    Layout is reference tensor output: block (i, j) of the returned
    (2 dim_out) x (2 dim_out) matrix is the channel applied to |i><j|.
    The trace-2 normalization is load bearing for the anti-degradability
    criterion, which is not scale invariant.
    """
    if kraus.dim_in != 2:
        raise UnsupportedDimensionError(f"Choi matrix supports qubit inputs only, got dim_in={kraus.dim_in}")
    d = kraus.dim_out
    stack = kraus.stack
    out = np.zeros((2 * d, 2 * d), dtype=np.complex128)
    for i in range(2):
        for j in range(2):
            out[i * d : (i + 1) * d, j * d : (j + 1) * d] = np.einsum(
                "ak,al->kl", stack[:, :, i], stack[:, :, j].conj()
            )
    return out


def partial_transpose(m) -> np.ndarray:
    """Transpose the second qubit factor of a 4x4 Hermitian matrix.

    A pure entry permutation, so applying it twice reproduces the input bit
    for bit.
    """
    arr = check_hermitian(m)
    if arr.shape[0] != 4:
        raise UnsupportedDimensionError(f"partial transpose implemented for dimension 4 only, got {arr.shape[0]}")
    return arr.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4).copy()
