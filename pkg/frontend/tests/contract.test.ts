// Contract tests against recorded service responses. The fixtures were
// captured from the real service with the demo config (coeffs 5,3,2,1,
// k=100); the client must display those numbers verbatim.
import { describe, expect, it } from "vitest";

import { badgeText } from "../src/badge";
import { peakMarkers, spacingAnnotation, type PlotBox } from "../src/plot";
import {
  applyClassification,
  applyOutcome,
  chooseSlit,
  formatPayoffs,
  initialState,
} from "../src/state";
import type {
  EquilibriumResponse,
  PatternResponse,
  RoundOutcome,
  ServerConfig,
} from "../src/types";

import configFixture from "./fixtures/config.json";
import roundCC from "./fixtures/round_cc_lambda03.json";
import roundUnresolved from "./fixtures/round_unresolved.json";
import patternCC from "./fixtures/pattern_cc_lambda03.json";
import eq001 from "./fixtures/equilibrium_lambda001.json";
import eq005 from "./fixtures/equilibrium_lambda005.json";
import eq020 from "./fixtures/equilibrium_lambda020.json";

const config = configFixture as ServerConfig;
const round = roundCC as RoundOutcome;
const pattern = patternCC as unknown as PatternResponse;
const box: PlotBox = { width: 920, height: 260, pad: 12 };

describe("completed (C,C) round at lambda=0.3", () => {
  it("displays payoffs 13 / 13", () => {
    const state = applyOutcome(initialState(config), round);
    expect(state.lastOutcome).not.toBeNull();
    expect(formatPayoffs(state.lastOutcome!)).toBe("13 / 13");
  });

  it("is a quantum-resolved round", () => {
    expect(round.regime).toBe("quantum_resolved");
    expect(round.measurement?.resolved).toBe(true);
  });

  it("peak marker count equals the fixture's peaks_used", () => {
    const markers = peakMarkers(pattern, box);
    expect(markers.length).toBe(pattern.measurement!.peaks_used);
    expect(markers.length).toBeGreaterThanOrEqual(3);
  });

  it("annotates the measured spacing from service fields", () => {
    const note = spacingAnnotation(pattern);
    expect(note).toContain("Δu");
    // the displayed spacing is the service's delta_u, only trimmed
    expect(note).toContain(pattern.measurement!.delta_u!.toPrecision(6).replace(/\.?0+$/, ""));
  });

  it("markers stay inside the plot box", () => {
    for (const marker of peakMarkers(pattern, box)) {
      expect(marker.x).toBeGreaterThanOrEqual(box.pad);
      expect(marker.x).toBeLessThanOrEqual(box.width - box.pad);
      expect(marker.y).toBeGreaterThanOrEqual(box.pad);
      expect(marker.y).toBeLessThanOrEqual(box.height - box.pad);
    }
  });
});

describe("lambda slider regime badges", () => {
  const cases: Array<[EquilibriumResponse, string]> = [
    [eq001 as EquilibriumResponse, "Defection NE"],
    [eq005 as EquilibriumResponse, "No pure symmetric NE"],
    [eq020 as EquilibriumResponse, "Cooperation NE"],
  ];

  it.each(cases)("classification %#", (fixture, expected) => {
    const state = applyClassification(initialState(config), fixture.classification);
    expect(badgeText(state.lastClassification!)).toBe(expected);
  });
});

describe("unresolved classical round", () => {
  it("renders the classical fallback payoffs and regime", () => {
    const outcome = roundUnresolved as RoundOutcome;
    expect(outcome.regime).toBe("classical_unresolved");
    expect(formatPayoffs(outcome)).toBe("3 / 3");
    expect(outcome.measurement).toBeNull();
  });
});

describe("session state mirrors the server config", () => {
  it("starts from config values without local overrides", () => {
    const state = initialState(config);
    expect(state.lambda).toBe(config.lambda);
    expect(state.k).toBe(config.k);
    expect(state.coeffs).toEqual({ t: config.t, r: config.r, p: config.p, s: config.s });
  });

  it("a single choice does not fire a round", () => {
    const { state, fire } = chooseSlit(initialState(config), "alice", "C");
    expect(fire).toBeNull();
    expect(state.pendingAlice).toBe("C");
    expect(state.pendingBob).toBeNull();
  });

  it("the second choice fires with the session lambda", () => {
    const first = chooseSlit(initialState(config), "alice", "C");
    const second = chooseSlit(first.state, "bob", "C");
    expect(second.fire).toEqual({ alice: "C", bob: "C", lambda: config.lambda });
    expect(second.state.roundInFlight).toBe(true);
  });
});
