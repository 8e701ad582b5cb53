// Session-state machine tests: choice sequencing, scripted opponents,
// in-flight locking, and error recovery.
import { describe, expect, it } from "vitest";

import { scriptedMove } from "../src/opponent";
import {
  applyError,
  applyOutcome,
  chooseSlit,
  initialState,
  setLambda,
  setOpponent,
} from "../src/state";
import type { RoundOutcome, ServerConfig } from "../src/types";

import configFixture from "./fixtures/config.json";
import roundCC from "./fixtures/round_cc_lambda03.json";

const config = configFixture as ServerConfig;
const outcome = roundCC as RoundOutcome;

describe("scripted opponents", () => {
  it("always-defect opens D", () => {
    expect(scriptedMove("always_defect", null)).toBe("D");
    expect(scriptedMove("always_defect", "C")).toBe("D");
  });

  it("tit-for-tat cooperates first, then mirrors", () => {
    expect(scriptedMove("tit_for_tat", null)).toBe("C");
    expect(scriptedMove("tit_for_tat", "D")).toBe("D");
    expect(scriptedMove("tit_for_tat", "C")).toBe("C");
  });

  it("human never auto-picks", () => {
    expect(scriptedMove("human", "C")).toBeNull();
  });
});

describe("opponent wiring in chooseSlit", () => {
  it("alice's choice auto-fires against a scripted bob", () => {
    const state = setOpponent(initialState(config), "always_defect");
    const result = chooseSlit(state, "alice", "C");
    expect(result.fire).toEqual({ alice: "C", bob: "D", lambda: config.lambda });
  });

  it("tit-for-tat mirrors alice's previous move", () => {
    let state = setOpponent(initialState(config), "tit_for_tat");
    const first = chooseSlit(state, "alice", "D");
    expect(first.fire!.bob).toBe("C"); // no history yet
    state = applyOutcome(first.state, { ...outcome, alice: "D" });
    const second = chooseSlit(state, "alice", "C");
    expect(second.fire!.bob).toBe("D"); // mirrors last round's D
  });
});

describe("in-flight locking and errors", () => {
  it("ignores clicks while a round is in flight", () => {
    const fired = chooseSlit(
      chooseSlit(initialState(config), "alice", "C").state,
      "bob",
      "D",
    );
    expect(fired.state.roundInFlight).toBe(true);
    const ignored = chooseSlit(fired.state, "alice", "D");
    expect(ignored.fire).toBeNull();
    expect(ignored.state).toBe(fired.state);
  });

  it("errors preserve choices for retry and unlock the table", () => {
    const fired = chooseSlit(
      chooseSlit(initialState(config), "alice", "C").state,
      "bob",
      "D",
    );
    const failed = applyError(fired.state, "service unreachable");
    expect(failed.error).toContain("unreachable");
    expect(failed.roundInFlight).toBe(false);
    expect(failed.pendingAlice).toBe("C");
    expect(failed.pendingBob).toBe("D");
  });

  it("outcomes clear pending choices and record alice's move", () => {
    const fired = chooseSlit(
      chooseSlit(initialState(config), "alice", "C").state,
      "bob",
      "C",
    );
    const settled = applyOutcome(fired.state, outcome);
    expect(settled.pendingAlice).toBeNull();
    expect(settled.pendingBob).toBeNull();
    expect(settled.aliceLastMove).toBe("C");
    expect(settled.roundInFlight).toBe(false);
  });
});

describe("lambda slider state", () => {
  it("updates the session wavelength only", () => {
    const state = setLambda(initialState(config), 0.05);
    expect(state.lambda).toBe(0.05);
    expect(state.k).toBe(config.k);
  });
});
