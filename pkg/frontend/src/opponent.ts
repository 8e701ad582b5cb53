import type { StrategyLabel } from "./types";

// Scripted opponents only pick which slit to open; no payoff logic lives here.
export type OpponentKind = "human" | "tit_for_tat" | "always_defect";

export function scriptedMove(
  kind: OpponentKind,
  aliceLastMove: StrategyLabel | null,
): StrategyLabel | null {
  switch (kind) {
    case "human":
      return null;
    case "always_defect":
      return "D";
    case "tit_for_tat":
      // cooperate first, then mirror what Alice did last round
      return aliceLastMove ?? "C";
  }
}
