"""Multi-slit diffraction Prisoners' Dilemma.

Players open one of their two slits, a scalar Fraunhofer engine renders the
interference pattern, and the arbiter prices the round from the measured
fringe spacing: P = d + k*(lambda/d). The wavelength dials the game from the
classical dilemma (defection equilibrium, lambda <= s*p/k) through an
equilibrium-free band into a cooperative regime (lambda >= r*t/k).
"""
from .arbiter import (
    ApparatusConfig,
    GameOutcome,
    SweepResult,
    classify_regime,
    cooperation_threshold,
    defection_threshold,
    play_round,
    sweep_lambda,
)
from .game import (
    GameParameters,
    MixedEquilibrium,
    PayoffCoefficients,
    PayoffPair,
    Strategy,
    StrategyProfile,
    is_symmetric_ne,
    pure_ne_profiles,
    quantum_payoff,
    separation_for_profile,
    symmetric_mixed_ne,
)
from .layout import LayoutSolution, abstract_window_for_profile, solve_layout
from .matter import (
    Particle,
    PhysicalConstants,
    UnitScale,
    de_broglie_wavelength,
    scaling_factor_for_velocity,
    velocity_bound_for_cooperation,
)
from .optics import (
    ApertureWindow,
    Detector,
    DiffractionPattern,
    FringeMeasurement,
    ScreenGrid,
    Slit,
    SlitState,
    detect_peaks,
    intensity_pattern,
    measure_fringe_spacing,
)

__version__ = "0.1.0"

__all__ = [
    "ApertureWindow",
    "ApparatusConfig",
    "Detector",
    "DiffractionPattern",
    "FringeMeasurement",
    "GameOutcome",
    "GameParameters",
    "LayoutSolution",
    "MixedEquilibrium",
    "Particle",
    "PayoffCoefficients",
    "PayoffPair",
    "PhysicalConstants",
    "ScreenGrid",
    "Slit",
    "SlitState",
    "Strategy",
    "StrategyProfile",
    "SweepResult",
    "UnitScale",
    "abstract_window_for_profile",
    "classify_regime",
    "cooperation_threshold",
    "de_broglie_wavelength",
    "defection_threshold",
    "detect_peaks",
    "intensity_pattern",
    "is_symmetric_ne",
    "measure_fringe_spacing",
    "play_round",
    "pure_ne_profiles",
    "quantum_payoff",
    "scaling_factor_for_velocity",
    "separation_for_profile",
    "solve_layout",
    "sweep_lambda",
    "symmetric_mixed_ne",
    "velocity_bound_for_cooperation",
]
