/** Wire types of the solve service. All score values travel as strings
 * with five fractional digits; the client never recomputes them. */

import type { Framework } from "./apx.js";

export type SemanticsId =
  | "conflict-free"
  | "admissible"
  | "complete"
  | "grounded"
  | "preferred"
  | "stable";

export type IndexId = "shapley" | "banzhaf" | "deegan-packel" | "johnston";

export const SEMANTICS: SemanticsId[] = [
  "conflict-free",
  "admissible",
  "complete",
  "grounded",
  "preferred",
  "stable",
];

export const INDEXES: IndexId[] = ["shapley", "banzhaf", "deegan-packel", "johnston"];

export interface SolveRequest {
  framework: Framework;
  semantics: SemanticsId;
  task: "rank";
  index: IndexId;
}

export interface ScoreRow {
  argument: string;
  pi_in: string;
  pi_out: string;
  class: number;
}

export interface RankResult {
  scores: ScoreRow[];
  classes: string[][];
  ranking: string;
  greyscale: Record<string, number>;
}

export interface SolveResponse {
  task: string;
  semantics: string;
  index: string | null;
  result: RankResult;
  warnings: string[];
  timing_ms: number;
}
