/** Query-set builder: draft rows with stable local ids and table rendering. */

import { algorithmName, formatParameters, sourceLabel } from "./format.js";
import type { QueryOut, QueryPayload } from "./types.js";

/**
 * Pre-submit collection of queries.  Ids are assigned on add and keep
 * their value when other rows are removed, mirroring how the service
 * treats local ids after submission.
 */
export class QuerySetBuilder {
  private next = 0;
  private items: QueryOut[] = [];

  add(payload: QueryPayload): number {
    const local_id = this.next++;
    this.items.push({ ...payload, local_id });
    return local_id;
  }

  remove(localId: number): boolean {
    const before = this.items.length;
    this.items = this.items.filter((q) => q.local_id !== localId);
    return this.items.length < before;
  }

  clear(): void {
    this.items = [];
    this.next = 0;
  }

  get rows(): readonly QueryOut[] {
    return this.items;
  }

  /** Bodies for POST /api/querysets, in row order. */
  get payloads(): QueryPayload[] {
    return this.items.map(({ local_id: _ignored, ...payload }) => payload);
  }

  get size(): number {
    return this.items.length;
  }
}

/** Render rows into the builder table body (Id | ✕ | Dataset | Algorithm | Source | Parameters). */
export function renderQueryRows(
  tbody: HTMLTableSectionElement,
  rows: readonly QueryOut[],
  onRemove?: (localId: number) => void,
): void {
  tbody.replaceChildren();
  for (const query of rows) {
    const tr = document.createElement("tr");

    const idCell = document.createElement("td");
    idCell.textContent = String(query.local_id);
    tr.appendChild(idCell);

    const removeCell = document.createElement("td");
    if (onRemove) {
      const button = document.createElement("button");
      button.type = "button";
      button.className = "remove-query";
      button.textContent = "☒";
      button.title = `remove query ${query.local_id}`;
      button.addEventListener("click", () => onRemove(query.local_id));
      removeCell.appendChild(button);
    }
    tr.appendChild(removeCell);

    for (const text of [
      query.dataset_id,
      algorithmName(query.algorithm),
      sourceLabel(query),
      formatParameters(query),
    ]) {
      const td = document.createElement("td");
      td.textContent = text;
      tr.appendChild(td);
    }
    tbody.appendChild(tr);
  }
}
