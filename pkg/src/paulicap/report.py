"""One-stop evaluation of every capacity quantity at a parameter point."""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import (
    OptimizerConfig,
    best_quantum_upper_bound,
    flag_bound_A,
    flag_bound_B,
    private_capacity_upper,
    region_flags,
    single_shot_quantum_capacity,
)
from .capacities import ClassicalCapacityResult, classical_capacity, entanglement_assisted_capacity
from .channel import ChannelParams


@dataclass(frozen=True)
class CapacityReport:
    """All computed capacities, bounds and region flags at one channel point.

    ``lower`` and ``lower_argmax`` are None when the optimizer was skipped.
    """

    params: ChannelParams
    classical: ClassicalCapacityResult
    entanglement_assisted: float
    upper_a: float
    upper_b: float
    best_upper: float
    best_upper_source: str
    lower: float | None
    lower_argmax: tuple | None
    private_upper: float
    entanglement_breaking: bool
    antidegradable: bool
    ad_margin: float
    pt_eigenvalues: tuple
    capacity_known_zero: bool


def evaluate_point(
    params: ChannelParams,
    config: OptimizerConfig | None = None,
    include_lower: bool = True,
) -> CapacityReport:
    flags = region_flags(params)
    best_upper, source = best_quantum_upper_bound(params)
    if include_lower:
        shot = single_shot_quantum_capacity(params, config)
        lower = 0.0 if flags.antidegradable else shot.value
        lower_argmax = (shot.r, shot.z)
    else:
        lower = None
        lower_argmax = None
    return CapacityReport(
        params=params,
        classical=classical_capacity(params),
        entanglement_assisted=entanglement_assisted_capacity(params),
        upper_a=flag_bound_A(params),
        upper_b=flag_bound_B(params),
        best_upper=best_upper,
        best_upper_source=source,
        lower=lower,
        lower_argmax=lower_argmax,
        private_upper=private_capacity_upper(params),
        entanglement_breaking=flags.entanglement_breaking,
        antidegradable=flags.antidegradable,
        ad_margin=flags.ad_margin,
        pt_eigenvalues=flags.pt_eigenvalues,
        capacity_known_zero=flags.antidegradable,
    )
