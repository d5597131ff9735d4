/** Status polling: 1s interval with exponential backoff capped at 10s. */

import type { TaskStatus } from "./types.js";

export interface PollOptions {
  baseMs?: number;
  maxMs?: number;
  /** Injectable for tests. */
  sleep?: (ms: number) => Promise<void>;
  /** Return true to stop polling early (e.g. the user navigated away). */
  cancelled?: () => boolean;
  onUpdate?: (tasks: TaskStatus[]) => void;
}

export function allTerminal(tasks: TaskStatus[]): boolean {
  return tasks.every((t) => t.status === "completed" || t.status === "failed");
}

export function backoffDelays(baseMs: number, maxMs: number): (attempt: number) => number {
  return (attempt) => Math.min(maxMs, baseMs * 2 ** attempt);
}

const defaultSleep = (ms: number) => new Promise<void>((resolve) => setTimeout(resolve, ms));

/**
 * Poll until every task is terminal; resolves with the final statuses,
 * or null when cancelled.  Polling always ceases on the first terminal
 * snapshot.
 */
export async function pollUntilTerminal(
  fetchStatus: () => Promise<TaskStatus[]>,
  options: PollOptions = {},
): Promise<TaskStatus[] | null> {
  const { baseMs = 1000, maxMs = 10000, sleep = defaultSleep, cancelled, onUpdate } = options;
  const delay = backoffDelays(baseMs, maxMs);

  for (let attempt = 0; ; attempt++) {
    if (cancelled?.()) return null;
    const tasks = await fetchStatus();
    if (cancelled?.()) return null;
    onUpdate?.(tasks);
    if (allTerminal(tasks)) return tasks;
    await sleep(delay(attempt));
  }
}
