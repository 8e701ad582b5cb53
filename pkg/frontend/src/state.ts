import type {
  Classification,
  RoundOutcome,
  ServerConfig,
  StrategyLabel,
  SweepResponse,
} from "./types";
import { scriptedMove, type OpponentKind } from "./opponent";

// Session state mirrors the server config until the user overrides lambda; it
// caches the last outcome and the sweep strip. All numbers inside come from
// service responses.
export interface SessionState {
  lambda: number;
  k: number;
  coeffs: { t: number; r: number; p: number; s: number };
  mode: string;
  pendingAlice: StrategyLabel | null;
  pendingBob: StrategyLabel | null;
  lastOutcome: RoundOutcome | null;
  lastClassification: Classification | null;
  sweep: SweepResponse | null;
  opponent: OpponentKind;
  aliceLastMove: StrategyLabel | null;
  roundInFlight: boolean;
  error: string | null;
}

export function initialState(config: ServerConfig): SessionState {
  return {
    lambda: config.lambda,
    k: config.k,
    coeffs: { t: config.t, r: config.r, p: config.p, s: config.s },
    mode: config.payoff_mode,
    pendingAlice: null,
    pendingBob: null,
    lastOutcome: null,
    lastClassification: null,
    sweep: null,
    opponent: "human",
    aliceLastMove: null,
    roundInFlight: false,
    error: null,
  };
}

export interface RoundRequest {
  alice: StrategyLabel;
  bob: StrategyLabel;
  lambda: number;
}

export interface ChooseResult {
  state: SessionState;
  // present exactly when both choices are in and no round is in flight
  fire: RoundRequest | null;
}

export function chooseSlit(
  state: SessionState,
  player: "alice" | "bob",
  label: StrategyLabel,
): ChooseResult {
  if (state.roundInFlight) {
    return { state, fire: null }; // at most one in-flight round; clicks ignored
  }
  const next: SessionState = {
    ...state,
    pendingAlice: player === "alice" ? label : state.pendingAlice,
    pendingBob: player === "bob" ? label : state.pendingBob,
  };
  if (player === "alice" && next.pendingBob === null && next.opponent !== "human") {
    next.pendingBob = scriptedMove(next.opponent, state.aliceLastMove);
  }
  if (next.pendingAlice !== null && next.pendingBob !== null) {
    return {
      state: { ...next, roundInFlight: true, error: null },
      fire: { alice: next.pendingAlice, bob: next.pendingBob, lambda: next.lambda },
    };
  }
  return { state: next, fire: null };
}

export function applyOutcome(state: SessionState, outcome: RoundOutcome): SessionState {
  return {
    ...state,
    lastOutcome: outcome,
    aliceLastMove: outcome.alice,
    pendingAlice: null,
    pendingBob: null,
    roundInFlight: false,
    error: null,
  };
}

export function applyError(state: SessionState, message: string): SessionState {
  // choices are preserved so a retry can re-fire the same round
  return { ...state, roundInFlight: false, error: message };
}

export function setLambda(state: SessionState, lambda: number): SessionState {
  return { ...state, lambda };
}

export function setOpponent(state: SessionState, opponent: OpponentKind): SessionState {
  return { ...state, opponent, pendingBob: null };
}

export function applyClassification(
  state: SessionState,
  classification: Classification,
): SessionState {
  return { ...state, lastClassification: classification };
}

export function applySweep(state: SessionState, sweep: SweepResponse): SessionState {
  return { ...state, sweep };
}

// Payoff readout: the service numbers rendered verbatim.
export function formatPayoffs(outcome: RoundOutcome): string {
  return `${outcome.payoffs.alice} / ${outcome.payoffs.bob}`;
}
