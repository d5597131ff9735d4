import { beforeEach, describe, expect, it } from "vitest";

import { QuerySetBuilder, renderQueryRows } from "../src/builder.js";
import type { QueryPayload } from "../src/types.js";

const FIG2_ROWS: QueryPayload[] = [
  {
    dataset_id: "enwiki 2018-03-01",
    algorithm: "cyclerank",
    source: "Fake news",
    parameters: { k: 3, sigma: "exponential" },
    top_k: 5,
  },
  {
    dataset_id: "enwiki 2018-03-01",
    algorithm: "pagerank",
    parameters: { alpha: 0.3 },
    top_k: 5,
  },
  {
    dataset_id: "enwiki 2018-03-01",
    algorithm: "personalized_pagerank",
    source: "Fake news",
    parameters: { alpha: 0.3 },
    top_k: 5,
  },
];

function tbody(): HTMLTableSectionElement {
  document.body.innerHTML = "<table><tbody></tbody></table>";
  return document.querySelector("tbody") as HTMLTableSectionElement;
}

function cellText(body: HTMLTableSectionElement): string[][] {
  return [...body.querySelectorAll("tr")].map((tr) =>
    [...tr.querySelectorAll("td")].map((td) => td.textContent ?? ""),
  );
}

describe("QuerySetBuilder", () => {
  let builder: QuerySetBuilder;

  beforeEach(() => {
    builder = new QuerySetBuilder();
  });

  it("assigns dense ids in add order", () => {
    const ids = FIG2_ROWS.map((q) => builder.add(q));
    expect(ids).toEqual([0, 1, 2]);
  });

  it("keeps surviving ids on removal", () => {
    FIG2_ROWS.forEach((q) => builder.add(q));
    expect(builder.remove(1)).toBe(true);
    expect(builder.rows.map((q) => q.local_id)).toEqual([0, 2]);
  });

  it("removing a missing id is a no-op", () => {
    expect(builder.remove(5)).toBe(false);
    expect(builder.size).toBe(0);
  });

  it("clear empties the set and restarts ids", () => {
    FIG2_ROWS.forEach((q) => builder.add(q));
    builder.clear();
    expect(builder.size).toBe(0);
    expect(builder.add(FIG2_ROWS[0]!)).toBe(0);
  });

  it("payloads drop the local id", () => {
    FIG2_ROWS.forEach((q) => builder.add(q));
    expect(builder.payloads).toEqual(FIG2_ROWS);
  });
});

describe("renderQueryRows", () => {
  it("renders the three example rows like the task-builder table", () => {
    const builder = new QuerySetBuilder();
    FIG2_ROWS.forEach((q) => builder.add(q));
    const body = tbody();
    renderQueryRows(body, builder.rows);

    const rows = cellText(body);
    expect(rows.map((r) => r[0])).toEqual(["0", "1", "2"]);
    expect(rows.map((r) => r[3])).toEqual(["Cyclerank", "PageRank", "Pers. PageRank"]);
    expect(rows.map((r) => r[4])).toEqual(["Fake news", "-", "Fake news"]);
    expect(rows.map((r) => r[5])).toEqual(["k=3, σ=exp", "α=0.3", "α=0.3"]);
  });

  it("wires per-row remove buttons", () => {
    const builder = new QuerySetBuilder();
    FIG2_ROWS.forEach((q) => builder.add(q));
    const body = tbody();
    const removed: number[] = [];
    renderQueryRows(body, builder.rows, (id) => removed.push(id));

    const buttons = body.querySelectorAll<HTMLButtonElement>("button.remove-query");
    expect(buttons).toHaveLength(3);
    buttons[1]!.click();
    expect(removed).toEqual([1]);
  });

  it("re-render replaces previous rows", () => {
    const body = tbody();
    renderQueryRows(body, [{ ...FIG2_ROWS[0]!, local_id: 0 }]);
    renderQueryRows(body, []);
    expect(body.querySelectorAll("tr")).toHaveLength(0);
  });
});
