"""Prisoners' Dilemma payoff structure and the wavelength-modified payoff rule.

The four positive coefficients of the classical payoff matrix double as slit
separations, and the payoff a player receives for an open-pair separation d is
P = d + k*(lambda/d). As lambda -> 0 this reduces bit-exactly to the classical
matrix, so the classical game is embedded in the wavelength-parameterized one.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Strategy(Enum):
    """A pure strategy: which of a player's two slits gets opened."""

    COOPERATE = "C"
    DEFECT = "D"

    @classmethod
    def parse(cls, text: str) -> "Strategy":
        normalized = text.strip().upper()
        for member in cls:
            if normalized in (member.value, member.name):
                return member
        raise ValueError(f"unknown strategy {text!r}: expected C or D")

    @property
    def other(self) -> "Strategy":
        return Strategy.DEFECT if self is Strategy.COOPERATE else Strategy.COOPERATE


@dataclass(frozen=True)
class PayoffCoefficients:
    """The four matrix entries t > r > p > s > 0, in game length units.

    Strict positivity is required because every coefficient becomes a slit
    separation and s, p additionally appear as 1/s, 1/p in the defection
    threshold.
    """

    t: float
    r: float
    p: float
    s: float

    def __post_init__(self) -> None:
        values = (self.t, self.r, self.p, self.s)
        if not all(isinstance(v, (int, float)) and v > 0 for v in values):
            raise ValueError(f"coefficients must be positive reals, got {values}")
        if not (self.t > self.r > self.p > self.s):
            raise ValueError(
                f"coefficient ordering t > r > p > s violated: "
                f"t={self.t}, r={self.r}, p={self.p}, s={self.s}"
            )

    @property
    def min_separation(self) -> float:
        # s is the smallest entry under the enforced ordering
        return self.s

    def as_dict(self) -> dict:
        return {"t": self.t, "r": self.r, "p": self.p, "s": self.s}


@dataclass(frozen=True)
class StrategyProfile:
    """One simultaneous move pair; `alice` is the focal player."""

    alice: Strategy
    bob: Strategy

    def swapped(self) -> "StrategyProfile":
        return StrategyProfile(self.bob, self.alice)

    @classmethod
    def parse(cls, text: str) -> "StrategyProfile":
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"profile must look like 'C,D', got {text!r}")
        return cls(Strategy.parse(parts[0]), Strategy.parse(parts[1]))


ALL_PROFILES: tuple[StrategyProfile, ...] = (
    StrategyProfile(Strategy.COOPERATE, Strategy.COOPERATE),
    StrategyProfile(Strategy.COOPERATE, Strategy.DEFECT),
    StrategyProfile(Strategy.DEFECT, Strategy.COOPERATE),
    StrategyProfile(Strategy.DEFECT, Strategy.DEFECT),
)


@dataclass(frozen=True)
class GameParameters:
    """Payoff coefficients plus the wavelength lambda (u) and scaling factor k (u^2)."""

    coeffs: PayoffCoefficients
    wavelength: float
    k: float

    def __post_init__(self) -> None:
        if not self.wavelength >= 0:
            raise ValueError(f"wavelength must be >= 0, got {self.wavelength}")
        if not self.k > 0:
            raise ValueError(f"scaling factor k must be > 0, got {self.k}")


@dataclass(frozen=True)
class PayoffPair:
    alice: float
    bob: float


def separation_for_profile(profile: StrategyProfile, coeffs: PayoffCoefficients) -> float:
    """Separation of the two open slits for a focal-ordered profile.

    (C,C) -> r, (C,D) -> s, (D,C) -> t, (D,D) -> p.
    """
    if profile.alice is Strategy.COOPERATE:
        return coeffs.r if profile.bob is Strategy.COOPERATE else coeffs.s
    return coeffs.t if profile.bob is Strategy.COOPERATE else coeffs.p


def focal_payoff(profile: StrategyProfile, params: GameParameters) -> float:
    """Payoff to the focal (first) player: d + k*lambda/d."""
    d = separation_for_profile(profile, params.coeffs)
    return d + params.k * params.wavelength / d


def quantum_payoff(profile: StrategyProfile, params: GameParameters) -> PayoffPair:
    """Per-player payoffs under the wavelength-modified rule.

    Bob's payoff is the focal payoff of the swapped profile (symmetric game
    relabeling); the physical pattern itself realizes only the focal-ordered
    separation. At wavelength 0 both entries equal the classical matrix
    entries exactly.
    """
    return PayoffPair(
        alice=focal_payoff(profile, params),
        bob=focal_payoff(profile.swapped(), params),
    )


def is_symmetric_ne(strategy: Strategy, params: GameParameters) -> bool:
    """Weak symmetric-NE test: P(s*,s*) - P(s,s*) >= 0 for the alternative s.

    Boundary wavelengths count as equilibria (weak inequality).
    """
    stay = focal_payoff(StrategyProfile(strategy, strategy), params)
    deviate = focal_payoff(StrategyProfile(strategy.other, strategy), params)
    return stay - deviate >= 0


def pure_ne_profiles(params: GameParameters) -> list[StrategyProfile]:
    """All pure Nash equilibria by exhaustive enumeration of the 2x2 game.

    A profile is an equilibrium when neither player gains strictly by a
    unilateral deviation. Profiles are returned in the fixed order
    (C,C), (C,D), (D,C), (D,D).
    """
    equilibria = []
    for profile in ALL_PROFILES:
        alice_dev = StrategyProfile(profile.alice.other, profile.bob)
        bob_dev = StrategyProfile(profile.alice, profile.bob.other)
        alice_gains = focal_payoff(alice_dev, params) > focal_payoff(profile, params)
        bob_gains = focal_payoff(bob_dev.swapped(), params) > focal_payoff(profile.swapped(), params)
        if not alice_gains and not bob_gains:
            equilibria.append(profile)
    return equilibria


@dataclass(frozen=True)
class MixedEquilibrium:
    """Symmetric mixed equilibrium extension (the base analysis is pure-strategy only).

    `q_cooperate` is the cooperation probability making the opponent
    indifferent, present only when neither pure strategy is a symmetric NE.
    """

    q_cooperate: float | None
    degenerate: bool = False

    @property
    def exists(self) -> bool:
        return self.q_cooperate is not None


def symmetric_mixed_ne(params: GameParameters) -> MixedEquilibrium:
    """Indifference mixture when no pure symmetric NE exists.

    q* = (P(D,D)-P(C,D)) / ((P(D,D)-P(C,D)) + (P(C,C)-P(D,C))), valid only
    when it lands strictly inside (0,1). A zero denominator is reported as
    degenerate rather than raised.
    """
    if is_symmetric_ne(Strategy.COOPERATE, params) or is_symmetric_ne(Strategy.DEFECT, params):
        return MixedEquilibrium(None)
    pdd_pcd = focal_payoff(StrategyProfile(Strategy.DEFECT, Strategy.DEFECT), params) - focal_payoff(
        StrategyProfile(Strategy.COOPERATE, Strategy.DEFECT), params
    )
    pcc_pdc = focal_payoff(StrategyProfile(Strategy.COOPERATE, Strategy.COOPERATE), params) - focal_payoff(
        StrategyProfile(Strategy.DEFECT, Strategy.COOPERATE), params
    )
    denominator = pdd_pcd + pcc_pdc
    if denominator == 0:
        return MixedEquilibrium(None, degenerate=True)
    q = pdd_pcd / denominator
    if not 0 < q < 1:
        return MixedEquilibrium(None)
    return MixedEquilibrium(q)
