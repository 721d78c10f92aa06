"""Capacities of the rotation-covariant two-parameter Pauli qubit channel.

Exact classical and entanglement-assisted capacities, flag-extension upper
bounds and the single-shot coherent-information lower bound on the quantum
capacity, and the entanglement-breaking / anti-degradable zero-capacity
classification, for the channel family

    Lambda(rho) = p0 rho + p1 (X rho X + Y rho Y) + p3 Z rho Z,
    p0 + 2 p1 + p3 = 1.
"""

from .bounds import (
    OptimizerConfig,
    QuantumCapacityBounds,
    RegionFlags,
    SingleShotResult,
    SubchannelDegradability,
    antidegradability_boundary,
    antidegradability_test,
    best_quantum_upper_bound,
    choi_antidegradability_margin,
    classical_equals_A_boundary,
    coherent_information,
    entanglement_breaking_test,
    flag_bound_A,
    flag_bound_B,
    private_capacity_upper,
    quantum_capacity_interval,
    region_flags,
    single_shot_quantum_capacity,
    subchannel_degradability_check,
)
from .capacities import (
    ClassicalCapacityResult,
    classical_capacity,
    entanglement_assisted_capacity,
    mutual_information,
)
from .channel import (
    PAULI_I,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    BlochVector,
    ChannelParams,
    channel_output,
    channel_output_spectrum,
    complement_output,
    kraus_operators,
    verify_channel_covariance,
    verify_complement_covariance,
    verify_conjugation_property,
    verify_z2_exchange,
)
from .errors import DomainError, NotAStateError, UnsupportedDimensionError, ValidationError
from .linalg import (
    KrausSet,
    apply_kraus,
    binary_entropy,
    choi_matrix,
    complement_kraus,
    eigenvalues_hermitian,
    partial_transpose,
    von_neumann_entropy,
)
from .oracles import (
    OracleReport,
    oracle_closed_forms,
    oracle_holevo_classical,
    oracle_holevo_random_ensembles,
    oracle_mutual_info_grid,
    oracle_pt_eigenvalues,
    run_all_oracles,
)
from .report import CapacityReport, evaluate_point

__version__ = "0.1.0"

__all__ = [
    "BlochVector",
    "CapacityReport",
    "ChannelParams",
    "ClassicalCapacityResult",
    "DomainError",
    "KrausSet",
    "NotAStateError",
    "OptimizerConfig",
    "OracleReport",
    "PAULI_I",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "QuantumCapacityBounds",
    "RegionFlags",
    "SingleShotResult",
    "SubchannelDegradability",
    "UnsupportedDimensionError",
    "ValidationError",
    "antidegradability_boundary",
    "antidegradability_test",
    "apply_kraus",
    "best_quantum_upper_bound",
    "binary_entropy",
    "channel_output",
    "channel_output_spectrum",
    "choi_antidegradability_margin",
    "choi_matrix",
    "classical_capacity",
    "classical_equals_A_boundary",
    "coherent_information",
    "complement_kraus",
    "complement_output",
    "eigenvalues_hermitian",
    "entanglement_assisted_capacity",
    "entanglement_breaking_test",
    "evaluate_point",
    "flag_bound_A",
    "flag_bound_B",
    "kraus_operators",
    "mutual_information",
    "oracle_closed_forms",
    "oracle_holevo_classical",
    "oracle_holevo_random_ensembles",
    "oracle_mutual_info_grid",
    "oracle_pt_eigenvalues",
    "partial_transpose",
    "private_capacity_upper",
    "quantum_capacity_interval",
    "region_flags",
    "run_all_oracles",
    "single_shot_quantum_capacity",
    "subchannel_degradability_check",
    "verify_channel_covariance",
    "verify_complement_covariance",
    "verify_conjugation_property",
    "verify_z2_exchange",
    "von_neumann_entropy",
]
