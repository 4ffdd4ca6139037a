/**
 * Pure projections from a solve response to what the output panel shows.
 * Every displayed number is the wire string, verbatim; the only numeric
 * field the client touches is the greyscale shade, which arrives
 * precomputed per argument.
 */

import type { RankResult, SolveResponse } from "./types.js";

export interface TableRow {
  argument: string;
  piIn: string;
  piOut: string;
  classIndex: number;
}

export function tableRows(result: RankResult): TableRow[] {
  return result.scores.map((s) => ({
    argument: s.argument,
    piIn: s.pi_in,
    piOut: s.pi_out,
    classIndex: s.class,
  }));
}

export function rankingLine(result: RankResult): string {
  return result.ranking;
}

/** Shade for a node; unknown arguments (mid-edit) fall back to white. */
export function shadeOf(result: RankResult | null, id: string): number {
  if (!result) return 1.0;
  const shade = result.greyscale[id];
  return shade === undefined ? 1.0 : shade;
}

/** CSS fill for a shade: light for top-ranked, dark for bottom-ranked. */
export function shadeToFill(shade: number): string {
  const level = Math.round(25 + 70 * shade);
  return `hsl(0, 0%, ${level}%)`;
}

export function warningsOf(response: SolveResponse): string[] {
  return response.warnings;
}

/** Equal shades must coincide exactly with ranking equivalence classes. */
export function shadesMatchClasses(result: RankResult): boolean {
  const classOf = new Map<string, number>();
  result.classes.forEach((members, i) => members.forEach((m) => classOf.set(m, i)));
  const args = result.scores.map((s) => s.argument);
  return args.every((a) =>
    args.every(
      (b) =>
        (result.greyscale[a] === result.greyscale[b]) === (classOf.get(a) === classOf.get(b)),
    ),
  );
}
