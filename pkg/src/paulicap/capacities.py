"""Exact capacities: classical (Holevo) and entanglement assisted."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import BlochVector, ChannelParams, channel_output, complement_output
from .linalg import binary_entropy, von_neumann_entropy

BRANCH_EQUATORIAL = "equatorial"
BRANCH_POLAR = "polar"


@dataclass(frozen=True)
class ClassicalCapacityResult:
    """Classical capacity value together with its optimal-ensemble region.

    ``xi`` is the binary-entropy argument, so value = 1 - h(xi).  The branch
    records where the optimal antipodal pure-state pair sits: in the xy
    plane (equatorial) or on the z axis (polar).
    """

    value: float
    xi: float
    branch: str


def classical_capacity(params: ChannelParams) -> ClassicalCapacityResult:
    """Classical capacity 1 - h(xi); single letter is exact for unital qubit channels.

    The equatorial branch applies when (p0 - p3)^2 >= (2 p0 + 2 p3 - 1)^2,
    with xi = (1 + p0 - p3)/2; otherwise xi = p0 + p3.  Ties go to the
    equatorial label; the value is continuous across the boundary either way.
    """
    coh2 = (params.p0 - params.p3) ** 2
    gap2 = (2.0 * params.p0 + 2.0 * params.p3 - 1.0) ** 2
    if coh2 >= gap2:
        xi, branch = 0.5 * (1.0 + params.p0 - params.p3), BRANCH_EQUATORIAL
    else:
        xi, branch = params.p0 + params.p3, BRANCH_POLAR
    return ClassicalCapacityResult(value=1.0 - binary_entropy(xi), xi=xi, branch=branch)


def entanglement_assisted_capacity(params: ChannelParams) -> float:
    """C_E = 2 - H(p0, p1, p1, p3) in bits, attained at the maximally mixed input."""
    h = 0.0
    for w in params.probs:
        if w > 0.0:
            h -= w * math.log2(w)
    return 2.0 - h


def mutual_information(params: ChannelParams, state: BlochVector) -> float:
    """Quantum mutual information S(rho) + S(Lambda(rho)) - S(Lambda^c(rho)) in bits."""
    return (
        von_neumann_entropy(state.density_matrix())
        + von_neumann_entropy(channel_output(params, state))
        - von_neumann_entropy(complement_output(params, state))
    )
