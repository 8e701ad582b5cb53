"""Slit placement: fixed four-slit windows and per-round two-slit apertures.

A fixed window assigns each player two slits such that the four cross-pair
distances |Alice.x - Bob.y| equal the four matrix coefficients. Generic
coefficient quadruples admit no such collinear arrangement, so the engine
also provides the abstract per-round aperture (two slits at +-d/2) that
realizes the single separation the current profile calls for.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .game import PayoffCoefficients, StrategyProfile, separation_for_profile
from .optics import OWNER_ALICE, OWNER_BOB, ApertureWindow, Slit, SlitState

FEASIBILITY_TOLERANCE = 1e-12

POSITION_KEYS = ("alice_c", "alice_d", "bob_c", "bob_d")


@dataclass(frozen=True)
class LayoutSolution:
    """Outcome of the fixed-window search.

    `positions` always carries the best layout found (exact when feasible,
    least-squares otherwise); `residual` is the maximum absolute separation
    error of that layout and `sign_pattern` the difference-sign certificate
    of the winning candidate.
    """

    feasible: bool
    positions: dict[str, float]
    residual: float
    sign_pattern: str

    def separations(self) -> dict[str, float]:
        pos = self.positions
        return {
            "r": abs(pos["alice_c"] - pos["bob_c"]),
            "s": abs(pos["alice_c"] - pos["bob_d"]),
            "t": abs(pos["alice_d"] - pos["bob_c"]),
            "p": abs(pos["alice_d"] - pos["bob_d"]),
        }


def _layout_residual(positions: dict[str, float], coeffs: PayoffCoefficients) -> float:
    targets = {"r": coeffs.r, "s": coeffs.s, "t": coeffs.t, "p": coeffs.p}
    achieved = {
        "r": abs(positions["alice_c"] - positions["bob_c"]),
        "s": abs(positions["alice_c"] - positions["bob_d"]),
        "t": abs(positions["alice_d"] - positions["bob_c"]),
        "p": abs(positions["alice_d"] - positions["bob_d"]),
    }
    return max(abs(achieved[key] - targets[key]) for key in targets)


def solve_layout(coeffs: PayoffCoefficients) -> LayoutSolution:
    """Search all difference-sign assignments of a collinear four-slit window.

    Alice.C is pinned at 0. Fixing the signs e1 = sign(bc), e2 = sign(bd),
    e3 = sign(ad - bc) determines bc = e1*r, bd = e2*s, ad = bc + e3*t
    exactly, and the window exists iff the remaining separation comes out
    right: | |ad - bd| - p | <= 1e-12. When no sign assignment is consistent,
    the reported positions are the least-squares optimum over all
    difference-sign patterns, carried for inspection only (never for play).
    """
    # exact route: construct from three constraints, check the fourth
    for e1, e2, e3 in itertools.product((1.0, -1.0), repeat=3):
        bc = e1 * coeffs.r
        bd = e2 * coeffs.s
        ad = bc + e3 * coeffs.t
        gap = abs(abs(ad - bd) - coeffs.p)
        if gap <= FEASIBILITY_TOLERANCE:
            positions = {"alice_c": 0.0, "alice_d": ad, "bob_c": bc, "bob_d": bd}
            e4 = 1.0 if ad - bd >= 0 else -1.0
            pattern = "".join("+" if s > 0 else "-" for s in (e1, e2, e3, e4))
            return LayoutSolution(
                feasible=True,
                positions=positions,
                residual=_layout_residual(positions, coeffs),
                sign_pattern=pattern,
            )

    # infeasible: report the least-squares-optimal layout
    targets = np.array([coeffs.r, coeffs.s, coeffs.t, coeffs.p])
    best: tuple[float, dict[str, float], str] | None = None
    for signs in itertools.product((1.0, -1.0), repeat=4):
        s1, s2, s3, s4 = signs
        # rows: s1*bc = r, s2*bd = s, s3*(ad-bc) = t, s4*(ad-bd) = p
        # over unknowns x = (ad, bc, bd)
        design = np.array(
            [
                [0.0, s1, 0.0],
                [0.0, 0.0, s2],
                [s3, -s3, 0.0],
                [s4, 0.0, -s4],
            ]
        )
        solution, *_ = np.linalg.lstsq(design, targets, rcond=None)
        ad, bc, bd = solution
        positions = {"alice_c": 0.0, "alice_d": float(ad), "bob_c": float(bc), "bob_d": float(bd)}
        residual = _layout_residual(positions, coeffs)
        pattern = "".join("+" if s > 0 else "-" for s in signs)
        if best is None or residual < best[0]:
            best = (residual, positions, pattern)
    residual, positions, pattern = best
    return LayoutSolution(feasible=False, positions=positions, residual=residual, sign_pattern=pattern)


def abstract_window_for_profile(
    profile: StrategyProfile,
    coeffs: PayoffCoefficients,
    slit_width: float,
) -> tuple[ApertureWindow, SlitState]:
    """Two-slit aperture at +-d/2 for the profile's separation, both slits open."""
    d = separation_for_profile(profile, coeffs)
    if not slit_width < d / 2:
        raise ValueError(
            f"slit width {slit_width} too large for separation {d} (need width < d/2)"
        )
    window = ApertureWindow(
        (
            Slit(-d / 2, slit_width, OWNER_ALICE, profile.alice.value),
            Slit(d / 2, slit_width, OWNER_BOB, profile.bob.value),
        )
    )
    return window, SlitState.all_open(2)


def fixed_window(solution: LayoutSolution, slit_width: float) -> ApertureWindow:
    """Four-slit window at the solved positions; raises if the layout is not exact
    or the slits would overlap at this width."""
    if not solution.feasible:
        raise ValueError("cannot build a fixed window from an infeasible layout")
    owners_labels = {
        "alice_c": (OWNER_ALICE, "C"),
        "alice_d": (OWNER_ALICE, "D"),
        "bob_c": (OWNER_BOB, "C"),
        "bob_d": (OWNER_BOB, "D"),
    }
    slits = tuple(
        Slit(solution.positions[key], slit_width, *owners_labels[key])
        for key in POSITION_KEYS
    )
    return ApertureWindow(slits)


def state_for_profile(window: ApertureWindow, profile: StrategyProfile) -> SlitState:
    """Open exactly the two slits matching each player's chosen strategy."""
    wanted = {
        (OWNER_ALICE, profile.alice.value),
        (OWNER_BOB, profile.bob.value),
    }
    flags = tuple((slit.owner, slit.label) in wanted for slit in window.slits)
    if sum(flags) != 2:
        raise ValueError("window does not carry one slit per player strategy")
    return SlitState(flags)
