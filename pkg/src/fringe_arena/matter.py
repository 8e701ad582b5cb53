"""Matter-wave bridge: de Broglie wavelength and scaling-factor calibration.

The game works in abstract length units while lambda = h/p lives in meters;
`UnitScale.sigma` (meters per game unit) makes that conversion an explicit,
configurable parameter instead of an implicit identification.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .game import PayoffCoefficients

PLANCK_CONSTANT = 6.62607015e-34  # J*s, exact by SI definition
ELECTRON_MASS = 9.1093837015e-31  # kg
SPEED_OF_LIGHT = 299792458.0  # m/s

# Fraction of c above which the non-relativistic momentum starts to mislead
NONRELATIVISTIC_LIMIT = 0.01 * SPEED_OF_LIGHT


@dataclass(frozen=True)
class PhysicalConstants:
    h: float = PLANCK_CONSTANT
    m_e: float = ELECTRON_MASS


CONSTANTS = PhysicalConstants()


@dataclass(frozen=True)
class Particle:
    """A travelling particle with non-relativistic momentum p = m*v."""

    mass: float
    velocity: float

    def __post_init__(self) -> None:
        if not self.mass > 0:
            raise ValueError(f"mass must be > 0, got {self.mass}")
        if not self.velocity > 0:
            raise ValueError(f"velocity must be > 0, got {self.velocity}")
        if self.velocity > NONRELATIVISTIC_LIMIT:
            warnings.warn(
                f"velocity {self.velocity:.3e} m/s exceeds 0.01c; "
                "non-relativistic momentum is inaccurate here",
                stacklevel=2,
            )

    @property
    def momentum(self) -> float:
        return self.mass * self.velocity


@dataclass(frozen=True)
class UnitScale:
    """Meters per game length unit."""

    sigma: float = 1.0

    def __post_init__(self) -> None:
        if not self.sigma > 0:
            raise ValueError(f"sigma must be > 0, got {self.sigma}")


def de_broglie_wavelength(particle: Particle, constants: PhysicalConstants = CONSTANTS) -> float:
    """lambda = h / (m*v), in meters."""
    return constants.h / particle.momentum


def velocity_bound_for_cooperation(
    coeffs: PayoffCoefficients,
    k: float,
    scale: UnitScale = UnitScale(),
    constants: PhysicalConstants = CONSTANTS,
    mass: float = ELECTRON_MASS,
) -> float:
    """Maximum speed keeping cooperation an equilibrium: h*k / (m*sigma*r*t).

    At that speed the game-unit wavelength lambda_phys/sigma equals r*t/k
    exactly; with sigma = 1 this is the plain k*h/(m*r*t) bound.
    """
    if not k > 0:
        raise ValueError(f"k must be > 0, got {k}")
    if not mass > 0:
        raise ValueError(f"mass must be > 0, got {mass}")
    return constants.h * k / (mass * scale.sigma * coeffs.r * coeffs.t)


def scaling_factor_for_velocity(
    target_velocity: float,
    coeffs: PayoffCoefficients,
    scale: UnitScale = UnitScale(),
    constants: PhysicalConstants = CONSTANTS,
    mass: float = ELECTRON_MASS,
) -> float:
    """The unique k whose cooperation velocity bound equals `target_velocity`.

    Inverse of velocity_bound_for_cooperation: k = m*sigma*r*t*v / h. This is
    the arbiter's calibration knob for bringing required speeds into an
    experimentally reasonable range.
    """
    if not target_velocity > 0:
        raise ValueError(f"target velocity must be > 0, got {target_velocity}")
    if not mass > 0:
        raise ValueError(f"mass must be > 0, got {mass}")
    return mass * scale.sigma * coeffs.r * coeffs.t * target_velocity / constants.h
