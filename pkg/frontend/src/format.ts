/** Display formatting shared by the builder table and the result columns. */

import type { Algorithm, QueryOut, QueryPayload } from "./types.js";

const ALGORITHM_NAMES: Record<Algorithm, string> = {
  cyclerank: "Cyclerank",
  pagerank: "PageRank",
  personalized_pagerank: "Pers. PageRank",
  cheirank: "CheiRank",
  personalized_cheirank: "Pers. CheiRank",
  "2drank": "2DRank",
  personalized_2drank: "Pers. 2DRank",
};

const SIGMA_SHORT: Record<string, string> = {
  exponential: "exp",
  reciprocal: "rec",
  constant: "const",
};

export function algorithmName(algorithm: Algorithm): string {
  return ALGORITHM_NAMES[algorithm];
}

/** Compact parameter summary, e.g. "k=3, σ=exp" or "α=0.3". */
export function formatParameters(query: QueryPayload | QueryOut): string {
  if (query.algorithm === "cyclerank") {
    const k = query.parameters.k ?? 3;
    const sigma = String(query.parameters.sigma ?? "exponential");
    return `k=${k}, σ=${SIGMA_SHORT[sigma] ?? sigma}`;
  }
  const alpha = query.parameters.alpha ?? 0.85;
  return `α=${alpha}`;
}

/** Scores render with 6 significant digits, nothing beyond that. */
export function formatScore(score: number | undefined): string {
  if (score === undefined) return "";
  return String(Number(score.toPrecision(6)));
}

export function sourceLabel(query: QueryPayload | QueryOut): string {
  return query.source ?? "-";
}
