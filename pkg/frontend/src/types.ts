/** Wire types mirroring the task service JSON. */

export const ALGORITHMS = [
  "cyclerank",
  "pagerank",
  "personalized_pagerank",
  "cheirank",
  "personalized_cheirank",
  "2drank",
  "personalized_2drank",
] as const;

export type Algorithm = (typeof ALGORITHMS)[number];

export const PERSONALIZED: ReadonlySet<Algorithm> = new Set([
  "cyclerank",
  "personalized_pagerank",
  "personalized_cheirank",
  "personalized_2drank",
]);

/** Form state for one query before it is added to the set. */
export interface QueryDraft {
  dataset_id: string;
  algorithm: Algorithm;
  source: string;
  alpha: string;
  k: string;
  sigma: string;
  top_k: string;
}

export interface QueryPayload {
  dataset_id: string;
  algorithm: Algorithm;
  source?: string;
  parameters: Record<string, number | string>;
  top_k: number;
}

export interface QueryOut extends QueryPayload {
  local_id: number;
}

export interface QuerySet {
  id: string;
  created_at: string;
  queries: QueryOut[];
}

export type TaskState = "queued" | "running" | "completed" | "failed";

export interface TaskStatus {
  local_id: number;
  status: TaskState;
}

export interface ResultRow {
  rank: number;
  label: string;
  score?: number;
}

export interface TaskRecord {
  query_set_id: string;
  local_id: number;
  status: TaskState;
  query: QueryOut;
  result: ResultRow[] | null;
  log: string;
  timings: { enqueue: string; start: string | null; finish: string | null };
}

export interface DatasetInfo {
  dataset_id: string;
  display_name: string;
  format: "edgelist" | "pajek" | "asd";
  node_count: number;
  edge_count: number;
  origin: "preloaded" | "uploaded";
}
