/** Client-side validation of query drafts, mirroring the server rules. */

import { PERSONALIZED, type Algorithm, type QueryDraft, type QueryPayload } from "./types.js";

export const SIGMA_CHOICES = ["exponential", "reciprocal", "constant"] as const;

const SIGMA_ALIASES: Record<string, string> = {
  exp: "exponential",
  rec: "reciprocal",
  const: "constant",
};

export function canonicalSigma(raw: string): string | null {
  const name = SIGMA_ALIASES[raw] ?? raw;
  return (SIGMA_CHOICES as readonly string[]).includes(name) ? name : null;
}

export function isPersonalized(algorithm: Algorithm): boolean {
  return PERSONALIZED.has(algorithm);
}

export function usesCycleParams(algorithm: Algorithm): boolean {
  return algorithm === "cyclerank";
}

export interface FieldError {
  field: keyof QueryDraft;
  message: string;
}

/** All problems with a draft; an empty list means it can be submitted. */
export function validateDraft(draft: QueryDraft): FieldError[] {
  const errors: FieldError[] = [];

  if (!draft.dataset_id) {
    errors.push({ field: "dataset_id", message: "choose a dataset" });
  }
  if (isPersonalized(draft.algorithm) && draft.source.trim() === "") {
    errors.push({ field: "source", message: `${draft.algorithm} needs a source node` });
  }

  if (usesCycleParams(draft.algorithm)) {
    if (draft.k.trim() !== "") {
      const k = Number(draft.k);
      if (!Number.isInteger(k) || k < 2 || k > 10) {
        errors.push({ field: "k", message: "k must be an integer in [2,10]" });
      }
    }
    if (draft.sigma.trim() !== "" && canonicalSigma(draft.sigma.trim()) === null) {
      errors.push({ field: "sigma", message: "sigma must be exponential, reciprocal or constant" });
    }
  } else if (draft.alpha.trim() !== "") {
    const alpha = Number(draft.alpha);
    if (!Number.isFinite(alpha) || alpha <= 0 || alpha >= 1) {
      errors.push({ field: "alpha", message: "alpha must be in (0,1)" });
    }
  }

  if (draft.top_k.trim() !== "") {
    const topK = Number(draft.top_k);
    if (!Number.isInteger(topK) || topK < 1) {
      errors.push({ field: "top_k", message: "top-k must be a positive integer" });
    }
  }
  return errors;
}

/** Convert a valid draft to the POST body shape. */
export function toPayload(draft: QueryDraft): QueryPayload {
  const parameters: Record<string, number | string> = {};
  if (usesCycleParams(draft.algorithm)) {
    if (draft.k.trim() !== "") parameters.k = Number(draft.k);
    if (draft.sigma.trim() !== "") parameters.sigma = canonicalSigma(draft.sigma.trim())!;
  } else if (draft.alpha.trim() !== "") {
    parameters.alpha = Number(draft.alpha);
  }
  const payload: QueryPayload = {
    dataset_id: draft.dataset_id,
    algorithm: draft.algorithm,
    parameters,
    top_k: draft.top_k.trim() === "" ? 50 : Number(draft.top_k),
  };
  if (isPersonalized(draft.algorithm)) {
    payload.source = draft.source.trim();
  }
  return payload;
}
