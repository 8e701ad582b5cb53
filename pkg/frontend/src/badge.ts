import type { Classification } from "./types";

// Badge text is a pure function of the /equilibrium classification enum.
const BADGE_TEXT: Record<Classification, string> = {
  defection_ne: "Defection NE",
  cooperation_ne: "Cooperation NE",
  both: "Both pure NE (boundary)",
  no_pure_symmetric_ne: "No pure symmetric NE",
};

const BADGE_CLASS: Record<Classification, string> = {
  defection_ne: "badge-classical",
  cooperation_ne: "badge-quantum",
  both: "badge-boundary",
  no_pure_symmetric_ne: "badge-band",
};

export function badgeText(classification: Classification): string {
  return BADGE_TEXT[classification];
}

export function badgeClass(classification: Classification): string {
  return BADGE_CLASS[classification];
}
