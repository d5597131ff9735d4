"""Task lifecycle: validation, FIFO dispatch, worker pool, cancellation.

One :class:`Orchestrator` owns the in-memory task registry (mirroring
what is on disk), a FIFO queue, and W worker threads.  Registry and
queryset mutations are serialized behind a single lock; algorithm
execution happens outside it.  A crashing task is marked failed with
the error in its log and never wedges the queue.
"""
from __future__ import annotations

import queue
import threading
import time
import uuid
from datetime import datetime, timezone

from ..cycles import MAX_CYCLE_LENGTH, resolve_scoring
from ..exceptions import ComputationCancelled
from ..rankers import ALGORITHMS, PERSONALIZED_ALGORITHMS, make_ranker
from .store import DataStore

_WALK_PARAM_KEYS = {"alpha"}
_CYCLE_PARAM_KEYS = {"k", "sigma"}


def now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="microseconds")


def validate_queries(store: DataStore, queries: list[dict]) -> tuple[list[dict], list[dict]]:
    """Canonicalize draft queries and collect per-query validation errors.

    Source labels are intentionally NOT resolved here; an unknown label
    fails its own task at execution time without blocking siblings.
    """
    canonical: list[dict] = []
    errors: list[dict] = []

    def fail(local_id: int, message: str) -> None:
        errors.append({"local_id": local_id, "error": message})

    for local_id, q in enumerate(queries):
        algorithm = q.get("algorithm")
        if algorithm not in ALGORITHMS:
            fail(local_id, f"unknown algorithm {algorithm!r}")
            continue
        dataset_id = q.get("dataset_id")
        if not dataset_id or not store.has_dataset(dataset_id):
            fail(local_id, f"unknown dataset {dataset_id!r}")
            continue

        source = q.get("source") or None
        if algorithm in PERSONALIZED_ALGORITHMS and source is None:
            fail(local_id, f"{algorithm} requires a source node")
            continue

        raw = dict(q.get("parameters") or {})
        params: dict = {}
        if "K" in raw and "k" not in raw:  # accept the uppercase spelling
            raw["k"] = raw.pop("K")
        allowed = _CYCLE_PARAM_KEYS if algorithm == "cyclerank" else _WALK_PARAM_KEYS
        unknown = set(raw) - allowed
        if unknown:
            fail(local_id, f"unknown parameter(s) for {algorithm}: {sorted(unknown)}")
            continue

        try:
            if algorithm == "cyclerank":
                k = int(raw.get("k", 3))
                if not 2 <= k <= MAX_CYCLE_LENGTH:
                    raise ValueError(f"k must be in [2,{MAX_CYCLE_LENGTH}], got {k}")
                params = {"k": k, "sigma": resolve_scoring(str(raw.get("sigma", "exponential")))}
            else:
                alpha = float(raw.get("alpha", 0.85))
                if not 0.0 < alpha < 1.0:
                    raise ValueError(f"alpha must be in (0,1), got {alpha}")
                params = {"alpha": alpha}
        except (TypeError, ValueError) as exc:
            fail(local_id, str(exc))
            continue

        top_k = q.get("top_k", 50)
        try:
            top_k = int(top_k)
        except (TypeError, ValueError):
            fail(local_id, f"top_k must be a positive integer, got {top_k!r}")
            continue
        if top_k < 1:
            fail(local_id, f"top_k must be >= 1, got {top_k}")
            continue

        canonical.append(
            {
                "local_id": local_id,
                "dataset_id": dataset_id,
                "algorithm": algorithm,
                "source": source,
                "parameters": params,
                "top_k": top_k,
            }
        )
    return canonical, errors


def _new_record(qs_id: str, query: dict) -> dict:
    return {
        "query_set_id": qs_id,
        "local_id": query["local_id"],
        "status": "queued",
        "query": query,
        "result": None,
        "log": "",
        "timings": {"enqueue": now_iso(), "start": None, "finish": None},
    }


class Orchestrator:
    """FIFO scheduler feeding a fixed pool of worker threads."""

    def __init__(self, store: DataStore, workers: int = 2):
        if workers < 1:
            raise ValueError("worker count must be >= 1")
        self.store = store
        self.workers = workers
        self._queue: queue.Queue = queue.Queue()
        self._threads: list[threading.Thread] = []
        self._lock = threading.Lock()
        # (qs_id, local_id) -> {"record": dict, "cancel": Event}
        self._registry: dict[tuple[str, int], dict] = {}
        self._querysets: dict[str, dict] = {}

    # -- lifecycle -----------------------------------------------------------

    def recover(self) -> None:
        """Rebuild in-memory state from disk after a restart.

        Queued tasks are re-enqueued; tasks that were running when the
        process died are marked failed (their worker is gone).
        """
        for queryset, records in self.store.scan_querysets():
            self._querysets[queryset["id"]] = queryset
            by_id = {record["local_id"]: record for record in records}
            for query in queryset["queries"]:
                key = (queryset["id"], query["local_id"])
                record = by_id.get(query["local_id"])
                if record is None:  # lost to a crash mid-submit; re-create
                    record = _new_record(queryset["id"], query)
                    self.store.write_task(record)
                if record["status"] == "running":
                    record["status"] = "failed"
                    record["timings"]["finish"] = now_iso()
                    self._append_log(record, "interrupted by service restart")
                    self.store.write_task(record)
                self._registry[key] = {"record": record, "cancel": threading.Event()}
                if record["status"] == "queued":
                    self._queue.put(key)

    def start(self) -> None:
        for i in range(self.workers):
            t = threading.Thread(target=self._worker_loop, name=f"worker-{i}", daemon=True)
            t.start()
            self._threads.append(t)

    def stop(self) -> None:
        for entry in self._registry.values():
            entry["cancel"].set()
        for _ in self._threads:
            self._queue.put(None)
        for t in self._threads:
            t.join(timeout=30)
        self._threads.clear()

    # -- public operations ----------------------------------------------------

    def submit(self, canonical_queries: list[dict]) -> dict:
        qs_id = str(uuid.uuid4())
        queryset = {
            "id": qs_id,
            "created_at": now_iso(),
            "queries": canonical_queries,
        }
        with self._lock:
            self._querysets[qs_id] = queryset
            # tasks first, manifest last: a crash mid-submit leaves only
            # orphan task files, never a manifest naming missing records
            self.store.ensure_queryset_dir(qs_id)
            for query in canonical_queries:
                record = _new_record(qs_id, query)
                self._registry[(qs_id, query["local_id"])] = {
                    "record": record,
                    "cancel": threading.Event(),
                }
                self.store.write_task(record)
            self.store.write_queryset(queryset)
        for query in canonical_queries:
            self._queue.put((qs_id, query["local_id"]))
        return queryset

    def queryset(self, qs_id: str) -> dict | None:
        with self._lock:
            return self._querysets.get(qs_id)

    def status(self, qs_id: str) -> list[dict] | None:
        with self._lock:
            queryset = self._querysets.get(qs_id)
            if queryset is None:
                return None
            return [
                {
                    "local_id": query["local_id"],
                    "status": self._registry[(qs_id, query["local_id"])]["record"]["status"],
                }
                for query in queryset["queries"]
            ]

    def results(self, qs_id: str) -> list[dict] | None:
        with self._lock:
            queryset = self._querysets.get(qs_id)
            if queryset is None:
                return None
            return [
                self._registry[(qs_id, query["local_id"])]["record"]
                for query in queryset["queries"]
            ]

    def delete_query(self, qs_id: str, local_id: int) -> dict | None:
        """Remove one query; a running task is cancelled best-effort."""
        with self._lock:
            queryset = self._querysets.get(qs_id)
            if queryset is None:
                return None
            if all(q["local_id"] != local_id for q in queryset["queries"]):
                raise KeyError(local_id)
            queryset["queries"] = [
                q for q in queryset["queries"] if q["local_id"] != local_id
            ]
            entry = self._registry.pop((qs_id, local_id), None)
            if entry is not None:
                entry["cancel"].set()
            self.store.write_queryset(queryset)
            self.store.delete_task(qs_id, local_id)
            return queryset

    def clear(self, qs_id: str) -> dict | None:
        with self._lock:
            queryset = self._querysets.get(qs_id)
            if queryset is None:
                return None
            for query in queryset["queries"]:
                entry = self._registry.pop((qs_id, query["local_id"]), None)
                if entry is not None:
                    entry["cancel"].set()
                self.store.delete_task(qs_id, query["local_id"])
            queryset["queries"] = []
            self.store.write_queryset(queryset)
            return queryset

    # -- execution --------------------------------------------------------------

    def _worker_loop(self) -> None:
        while True:
            item = self._queue.get()
            if item is None:
                return
            try:
                self._execute(item)
            except Exception:  # defensive: a worker must never die
                pass

    @staticmethod
    def _append_log(record: dict, message: str) -> None:
        record["log"] += message + "\n"

    def _execute(self, key: tuple[str, int]) -> None:
        with self._lock:
            entry = self._registry.get(key)
            if entry is None or entry["record"]["status"] != "queued":
                return  # deleted or already handled
            record = entry["record"]
            cancel = entry["cancel"]
            query = record["query"]
            record["status"] = "running"
            record["timings"]["start"] = now_iso()
            self._append_log(record, f"task started ({query['algorithm']})")
            self.store.write_task(record)

        try:
            graph, how, load_ms = self.store.get_graph(query["dataset_id"])
            log_lines = [f"dataset {query['dataset_id']}: graph {how} in {load_ms:.2f} ms"]
            params = query["parameters"]
            ranker = make_ranker(
                query["algorithm"],
                source=query["source"],
                alpha=params.get("alpha"),
                k=params.get("k"),
                sigma=params.get("sigma"),
            )
            ranker._should_stop = cancel.is_set
            started = time.perf_counter()
            ranker.fit(graph)
            elapsed_ms = (time.perf_counter() - started) * 1000.0
            log_lines.append(f"{query['algorithm']} finished in {elapsed_ms:.2f} ms")
            if getattr(ranker, "converged_", True) is False:
                log_lines.append(
                    f"warning: walk did not converge within {ranker.n_iter_} iterations"
                )
            rows = []
            for row in ranker.top_k(query["top_k"]):
                cell = {"rank": row.rank, "label": row.label}
                if row.score is not None:
                    cell["score"] = row.score
                rows.append(cell)
            outcome = ("completed", rows, log_lines)
        except ComputationCancelled:
            outcome = ("failed", None, ["task cancelled"])
        except Exception as exc:  # noqa: BLE001 - all failures land in the log
            outcome = ("failed", None, [f"error: {exc}"])

        status, result, log_lines = outcome
        with self._lock:
            if key not in self._registry:
                return  # deleted while running; drop the outcome
            record["status"] = status
            record["result"] = result
            for line in log_lines:
                self._append_log(record, line)
            record["timings"]["finish"] = now_iso()
            self.store.write_task(record)
