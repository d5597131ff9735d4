import { describe, expect, it } from "vitest";

import { algorithmName, formatParameters, formatScore } from "../src/format.js";

describe("formatParameters", () => {
  it("summarizes cycle queries like the task-builder table", () => {
    expect(
      formatParameters({
        dataset_id: "d",
        algorithm: "cyclerank",
        parameters: { k: 3, sigma: "exponential" },
        top_k: 5,
      }),
    ).toBe("k=3, σ=exp");
  });

  it("summarizes walk queries with alpha", () => {
    expect(
      formatParameters({
        dataset_id: "d",
        algorithm: "pagerank",
        parameters: { alpha: 0.3 },
        top_k: 5,
      }),
    ).toBe("α=0.3");
  });

  it("falls back to defaults when parameters are empty", () => {
    expect(
      formatParameters({ dataset_id: "d", algorithm: "cyclerank", parameters: {}, top_k: 5 }),
    ).toBe("k=3, σ=exp");
    expect(
      formatParameters({ dataset_id: "d", algorithm: "cheirank", parameters: {}, top_k: 5 }),
    ).toBe("α=0.85");
  });
});

describe("formatScore", () => {
  it("renders 6 significant digits", () => {
    expect(formatScore(0.04978706836786394)).toBe("0.0497871");
    expect(formatScore(1 / 3)).toBe("0.333333");
    expect(formatScore(0.5)).toBe("0.5");
  });

  it("is empty for rank-only algorithms", () => {
    expect(formatScore(undefined)).toBe("");
  });
});

describe("algorithmName", () => {
  it("uses the display spellings", () => {
    expect(algorithmName("personalized_pagerank")).toBe("Pers. PageRank");
    expect(algorithmName("2drank")).toBe("2DRank");
  });
});
