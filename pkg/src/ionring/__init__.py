"""Normal modes, persistent rotation, and feasibility planning for a
magnetically threaded ring crystal of trapped ions."""

__version__ = "0.1.0"

from .core import (
    RingCharacterization,
    RingConfig,
    Species,
    Statistics,
    characterize_ring,
    flux_to_field,
    load_species_file,
    normalized_flux,
    registered_species,
    species_lookup,
)
from .errors import (
    DegenerateGroundStateError,
    DomainError,
    NumericalError,
    RingModelError,
    SpeciesLookupError,
)
from .levels import (
    GroundState,
    RotationalLevel,
    admissible_quantum_numbers,
    diameter_sweep,
    energy_gap,
    flux_sweep,
    ground_state,
    level,
    rigid_gap,
    rotor_oracle,
)
from .modes import (
    AngularConfiguration,
    ModeSpectrum,
    circulant_frequencies,
    crystallization_temperature,
    dimensionless_hessian,
    equilibrium_positions,
    mode_spectrum,
)
from .planner import (
    FeasibilityReport,
    QuasicrystalAnalysis,
    adiabatic_ramp_time,
    feasibility_report,
    mark_displacement,
    marker_waist_window,
    momentum_kick_ratio,
    quasicrystal_analysis,
    revival_time,
    rigid_corotation_max_diameter,
)
from .thermal import (
    ThermalPoint,
    characteristic_temperature,
    partition_function,
    thermal_average_frequency,
    thermal_curve,
    thermal_curve_kelvin,
    thermal_point,
    thermal_point_kelvin,
)

__all__ = [
    "AngularConfiguration",
    "DegenerateGroundStateError",
    "DomainError",
    "FeasibilityReport",
    "GroundState",
    "ModeSpectrum",
    "NumericalError",
    "QuasicrystalAnalysis",
    "RingCharacterization",
    "RingConfig",
    "RingModelError",
    "RotationalLevel",
    "Species",
    "SpeciesLookupError",
    "Statistics",
    "ThermalPoint",
    "admissible_quantum_numbers",
    "adiabatic_ramp_time",
    "characteristic_temperature",
    "characterize_ring",
    "circulant_frequencies",
    "crystallization_temperature",
    "diameter_sweep",
    "dimensionless_hessian",
    "energy_gap",
    "equilibrium_positions",
    "feasibility_report",
    "flux_sweep",
    "flux_to_field",
    "ground_state",
    "level",
    "load_species_file",
    "mark_displacement",
    "marker_waist_window",
    "mode_spectrum",
    "momentum_kick_ratio",
    "normalized_flux",
    "partition_function",
    "quasicrystal_analysis",
    "registered_species",
    "revival_time",
    "rigid_corotation_max_diameter",
    "rigid_gap",
    "rotor_oracle",
    "species_lookup",
    "thermal_average_frequency",
    "thermal_curve",
    "thermal_curve_kelvin",
    "thermal_point",
    "thermal_point_kelvin",
]
