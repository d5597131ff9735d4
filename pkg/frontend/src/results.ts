/** Side-by-side comparison view: one ranked column per task. */

import { algorithmName, formatParameters, formatScore, sourceLabel } from "./format.js";
import type { TaskRecord } from "./types.js";

function columnHeader(record: TaskRecord): HTMLElement {
  const header = document.createElement("div");
  header.className = "column-header";

  const title = document.createElement("h3");
  title.textContent = algorithmName(record.query.algorithm);
  header.appendChild(title);

  const subtitle = document.createElement("div");
  subtitle.className = "column-subtitle";
  subtitle.textContent = `${sourceLabel(record.query)} · ${formatParameters(record.query)}`;
  header.appendChild(subtitle);
  return header;
}

function resultTable(record: TaskRecord): HTMLElement {
  const table = document.createElement("table");
  table.className = "result-table";
  const head = table.createTHead().insertRow();
  for (const text of ["#", "label", "score"]) {
    const th = document.createElement("th");
    th.textContent = text;
    head.appendChild(th);
  }
  const body = table.createTBody();
  for (const row of record.result ?? []) {
    const tr = body.insertRow();
    tr.insertCell().textContent = String(row.rank);
    tr.insertCell().textContent = row.label;
    tr.insertCell().textContent = formatScore(row.score);
  }
  return table;
}

function errorCell(record: TaskRecord): HTMLElement {
  const div = document.createElement("div");
  div.className = "column-error";
  const lines = record.log.trim().split("\n");
  div.textContent = `failed: ${lines[lines.length - 1] ?? "see log"}`;
  return div;
}

/** Render one column per record, in submission order, exactly as delivered. */
export function renderComparison(container: HTMLElement, records: TaskRecord[]): void {
  container.replaceChildren();
  for (const record of records) {
    const column = document.createElement("div");
    column.className = `result-column status-${record.status}`;
    column.appendChild(columnHeader(record));

    if (record.status === "completed") {
      column.appendChild(resultTable(record));
    } else if (record.status === "failed") {
      column.appendChild(errorCell(record));
    } else {
      const pending = document.createElement("div");
      pending.className = "column-pending";
      pending.textContent = record.status;
      column.appendChild(pending);
    }
    container.appendChild(column);
  }
}
