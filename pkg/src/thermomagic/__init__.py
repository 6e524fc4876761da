"""Magic-state generation under single-qubit thermal operations.

Library + CLI for deciding and quantifying when coupling a stabiliser qubit
to a heat bath produces nonstabiliserness: witness evaluation, critical
temperatures and coherences, distillability landscapes, reachable-set
volumes, the optimal-Hamiltonian problem and a catalytic extension, each
paired with an independent brute-force oracle.
"""

__version__ = "0.1.0"

from .catalytic import (
    FreeEnergy,
    catalytic_critical_beta,
    catalytic_reachable,
    free_energy,
)
from .distill import (
    LandscapeGrid,
    best_fidelity,
    beta_dist,
    count_minimum_basins,
    landscape,
    orbit_fidelity,
)
from .extremal import (
    ExtremalResult,
    fibonacci_sphere,
    optimal_hamiltonian,
    thermodynamic_radius,
    v_brute_force,
    v_closed_form,
)
from .geometry import (
    SupportCoefficients,
    circle_l1_support,
    project_l1_ball,
    rotation_to_z,
    sign_vectors,
    support_coefficients,
    unit_vector,
)
from .oracle import azimuth_scan, cone_sample_witness, facet_distance_scan
from .stabiliser import (
    DistillThresholds,
    is_stabiliser,
    nonstabiliserness,
    orbit_directions,
    orbit_geometric_factor,
    stabiliser_fidelity_threshold,
)
from .thermal import (
    ConeMesh,
    EnergyFrameState,
    HamiltonianDirection,
    PopulationInterval,
    ThermalContext,
    coherence_cap,
    cone_contains,
    cone_mesh,
    gibbs_population,
    reachable_interval,
)
from .volume import VolumeEstimate, ball_samples, cone_volume, magic_volume
from .witness import (
    WitnessReport,
    critical_beta,
    critical_beta_closed_form,
    critical_coherence,
    evaluate_support,
    max_weighted_support,
    robustness,
    thermometer,
    witness,
    witness_argmax_point,
    witness_incoherent,
)

__all__ = [
    "EnergyFrameState",
    "HamiltonianDirection",
    "ThermalContext",
    "PopulationInterval",
    "ConeMesh",
    "SupportCoefficients",
    "WitnessReport",
    "LandscapeGrid",
    "VolumeEstimate",
    "ExtremalResult",
    "FreeEnergy",
    "DistillThresholds",
    "gibbs_population",
    "reachable_interval",
    "coherence_cap",
    "cone_contains",
    "cone_mesh",
    "rotation_to_z",
    "support_coefficients",
    "circle_l1_support",
    "project_l1_ball",
    "sign_vectors",
    "unit_vector",
    "is_stabiliser",
    "nonstabiliserness",
    "orbit_directions",
    "orbit_geometric_factor",
    "stabiliser_fidelity_threshold",
    "witness",
    "witness_incoherent",
    "witness_argmax_point",
    "evaluate_support",
    "max_weighted_support",
    "critical_beta",
    "critical_beta_closed_form",
    "critical_coherence",
    "robustness",
    "thermometer",
    "best_fidelity",
    "orbit_fidelity",
    "beta_dist",
    "landscape",
    "count_minimum_basins",
    "cone_volume",
    "magic_volume",
    "ball_samples",
    "v_closed_form",
    "v_brute_force",
    "fibonacci_sphere",
    "optimal_hamiltonian",
    "thermodynamic_radius",
    "free_energy",
    "catalytic_reachable",
    "catalytic_critical_beta",
    "azimuth_scan",
    "cone_sample_witness",
    "facet_distance_scan",
]
