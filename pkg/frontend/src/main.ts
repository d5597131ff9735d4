/** Application wiring: builder form, submission, polling, permalinks. */

import { ApiClient, ApiError, apiBaseFromLocation } from "./api.js";
import { QuerySetBuilder, renderQueryRows } from "./builder.js";
import { pollUntilTerminal } from "./poll.js";
import { renderComparison } from "./results.js";
import { ALGORITHMS, type Algorithm, type QueryDraft, type QuerySet } from "./types.js";
import { SIGMA_CHOICES, isPersonalized, toPayload, usesCycleParams, validateDraft } from "./validate.js";

const api = new ApiClient(apiBaseFromLocation(window.location.search));
const builder = new QuerySetBuilder();

/** The query set currently shown; stale poll responses are discarded by id. */
let activeSet: QuerySet | null = null;

const el = {
  comparisonId: document.getElementById("comparison-id") as HTMLElement,
  clearAll: document.getElementById("clear-all") as HTMLButtonElement,
  queryBody: document.querySelector("#query-table tbody") as HTMLTableSectionElement,
  form: document.getElementById("draft-form") as HTMLFormElement,
  dataset: document.getElementById("field-dataset") as HTMLSelectElement,
  algorithm: document.getElementById("field-algorithm") as HTMLSelectElement,
  source: document.getElementById("field-source") as HTMLInputElement,
  alpha: document.getElementById("field-alpha") as HTMLInputElement,
  k: document.getElementById("field-k") as HTMLInputElement,
  sigma: document.getElementById("field-sigma") as HTMLSelectElement,
  topK: document.getElementById("field-top-k") as HTMLInputElement,
  submit: document.getElementById("submit-set") as HTMLButtonElement,
  statusLine: document.getElementById("status-line") as HTMLElement,
  columns: document.getElementById("columns") as HTMLElement,
  banner: document.getElementById("banner") as HTMLElement,
  uploadForm: document.getElementById("upload-form") as HTMLFormElement,
  uploadName: document.getElementById("upload-name") as HTMLInputElement,
  uploadFormat: document.getElementById("upload-format") as HTMLSelectElement,
  uploadFile: document.getElementById("upload-file") as HTMLInputElement,
};

function banner(message: string, kind: "error" | "info" = "error"): void {
  el.banner.textContent = message;
  el.banner.className = message ? `banner ${kind}` : "banner";
}

function readDraft(): QueryDraft {
  return {
    dataset_id: el.dataset.value,
    algorithm: el.algorithm.value as Algorithm,
    source: el.source.value,
    alpha: el.alpha.value,
    k: el.k.value,
    sigma: el.sigma.value,
    top_k: el.topK.value,
  };
}

function showFieldErrors(errors: { field: string; message: string }[]): void {
  for (const span of el.form.querySelectorAll<HTMLElement>(".field-error")) {
    span.textContent = "";
  }
  for (const { field, message } of errors) {
    const span = el.form.querySelector<HTMLElement>(`.field-error[data-for="${field}"]`);
    if (span) span.textContent = message;
  }
}

function syncParameterFields(): void {
  const algorithm = el.algorithm.value as Algorithm;
  const cycle = usesCycleParams(algorithm);
  (el.k.closest("label") as HTMLElement).hidden = !cycle;
  (el.sigma.closest("label") as HTMLElement).hidden = !cycle;
  (el.alpha.closest("label") as HTMLElement).hidden = cycle;
  (el.source.closest("label") as HTMLElement).classList.toggle(
    "required",
    isPersonalized(algorithm),
  );
}

function renderBuilder(): void {
  renderQueryRows(el.queryBody, builder.rows, (localId) => {
    builder.remove(localId);
    renderBuilder();
  });
  el.submit.disabled = builder.size === 0;
}

function renderSubmittedSet(set: QuerySet): void {
  el.comparisonId.textContent = set.id;
  renderQueryRows(el.queryBody, set.queries, (localId) => {
    void removeSubmittedQuery(set.id, localId);
  });
  el.submit.disabled = true;
}

async function removeSubmittedQuery(id: string, localId: number): Promise<void> {
  try {
    const updated = await api.deleteQuery(id, localId);
    if (activeSet?.id !== id) return;
    activeSet = updated;
    renderSubmittedSet(updated);
    await showResultsOnce(id);
  } catch (err) {
    banner(String(err instanceof Error ? err.message : err));
  }
}

async function refreshDatasets(): Promise<void> {
  const datasets = await api.listDatasets();
  const current = el.dataset.value;
  el.dataset.replaceChildren();
  for (const ds of datasets) {
    const option = document.createElement("option");
    option.value = ds.dataset_id;
    option.textContent = `${ds.display_name} (${ds.node_count} nodes)`;
    el.dataset.appendChild(option);
  }
  if (datasets.some((d) => d.dataset_id === current)) el.dataset.value = current;
}

async function showResultsOnce(id: string): Promise<void> {
  const { tasks } = await api.getResults(id);
  if (activeSet?.id !== id) return;
  renderComparison(el.columns, tasks);
}

async function watch(set: QuerySet): Promise<void> {
  activeSet = set;
  el.statusLine.textContent = set.queries.length ? "running…" : "";
  const final = await pollUntilTerminal(
    async () => (await api.getStatus(set.id)).tasks,
    {
      cancelled: () => activeSet?.id !== set.id,
      onUpdate: (tasks) => {
        if (activeSet?.id !== set.id) return;
        const done = tasks.filter((t) => t.status === "completed" || t.status === "failed");
        el.statusLine.textContent = `${done.length}/${tasks.length} tasks finished`;
      },
    },
  );
  if (final === null || activeSet?.id !== set.id) return;
  el.statusLine.textContent = "";
  await showResultsOnce(set.id);
}

async function loadPermalink(id: string): Promise<void> {
  try {
    const { tasks } = await api.getResults(id);
    const set: QuerySet = {
      id,
      created_at: "",
      queries: tasks.map((t) => t.query),
    };
    renderSubmittedSet(set);
    activeSet = set;
    renderComparison(el.columns, tasks);
    const pending = tasks.some((t) => t.status === "queued" || t.status === "running");
    if (pending) await watch(set);
  } catch (err) {
    banner(err instanceof ApiError ? err.message : String(err));
  }
}

function wireEvents(): void {
  el.algorithm.addEventListener("change", syncParameterFields);
  el.dataset.addEventListener("focus", () => void refreshDatasets().catch(() => undefined));

  el.form.addEventListener("submit", (event) => {
    event.preventDefault();
    const draft = readDraft();
    const errors = validateDraft(draft);
    showFieldErrors(errors);
    if (errors.length > 0) return;
    builder.add(toPayload(draft));
    renderBuilder();
  });

  el.submit.addEventListener("click", () => {
    void (async () => {
      banner("");
      try {
        const set = await api.submitQuerySet(builder.payloads);
        builder.clear();
        window.location.hash = set.id;
        renderSubmittedSet(set);
        el.columns.replaceChildren();
        await watch(set);
      } catch (err) {
        banner(err instanceof ApiError ? err.message : String(err));
      }
    })();
  });

  el.clearAll.addEventListener("click", () => {
    void (async () => {
      if (activeSet !== null) {
        try {
          const cleared = await api.clearQuerySet(activeSet.id);
          activeSet = cleared;
          renderSubmittedSet(cleared);
          el.columns.replaceChildren();
        } catch (err) {
          banner(String(err instanceof Error ? err.message : err));
        }
      } else {
        builder.clear();
        renderBuilder();
      }
    })();
  });

  el.uploadForm.addEventListener("submit", (event) => {
    event.preventDefault();
    const file = el.uploadFile.files?.[0];
    if (!file) return;
    void (async () => {
      try {
        const info = await api.uploadDataset(el.uploadName.value, el.uploadFormat.value, file);
        banner(`uploaded ${info.display_name}: ${info.node_count} nodes, ${info.edge_count} edges`, "info");
        await refreshDatasets();
      } catch (err) {
        banner(err instanceof ApiError ? err.message : String(err));
      }
    })();
  });

  window.addEventListener("hashchange", () => {
    const id = window.location.hash.slice(1);
    if (id && id !== activeSet?.id) void loadPermalink(id);
  });
}

async function init(): Promise<void> {
  for (const name of ALGORITHMS) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    el.algorithm.appendChild(option);
  }
  for (const name of SIGMA_CHOICES) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    el.sigma.appendChild(option);
  }
  syncParameterFields();
  renderBuilder();
  try {
    await refreshDatasets();
  } catch (err) {
    banner(`cannot reach the service: ${err instanceof Error ? err.message : err}`);
  }
  const id = window.location.hash.slice(1);
  if (id) await loadPermalink(id);
}

wireEvents();
void init();
