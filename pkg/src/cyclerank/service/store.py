"""Directory-tree datastore for datasets, query sets, task records and logs.

Layout under the data directory:

    datasets/<dataset_id>/original.<ext>   raw uploaded/bundled file
    datasets/<dataset_id>/meta.json        dataset info (counts, format, origin)
    datasets/<dataset_id>/graph.npz        binary adjacency cache
    querysets/<uuid>/queryset.json         queries and creation time
    querysets/<uuid>/tasks/<local_id>.json task record (status/result/log/timings)

Every JSON write goes through write-then-rename so a crash never leaves
a half-written record.  Parsed graphs are additionally memoized in
process memory, one parse per dataset per process.
"""
from __future__ import annotations

import json
import os
import threading
import time
from pathlib import Path

import numpy as np

from .. import formats
from ..datasets import BUNDLED, bundled_text
from ..graph import Graph

_EXT = {"edgelist": "csv", "pajek": "net", "asd": "asd"}


def atomic_write_text(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def atomic_write_json(path: Path, payload) -> None:
    atomic_write_text(path, json.dumps(payload, ensure_ascii=False, indent=1))


class DuplicateDatasetError(ValueError):
    pass


class DataStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.datasets_dir = self.root / "datasets"
        self.querysets_dir = self.root / "querysets"
        self.datasets_dir.mkdir(parents=True, exist_ok=True)
        self.querysets_dir.mkdir(parents=True, exist_ok=True)
        self._graphs: dict[str, Graph] = {}
        self._graph_locks: dict[str, threading.Lock] = {}
        self._lock = threading.Lock()

    # -- datasets -----------------------------------------------------------

    def dataset_ids(self) -> list[str]:
        return sorted(
            p.name for p in self.datasets_dir.iterdir() if (p / "meta.json").exists()
        )

    def dataset_info(self, dataset_id: str) -> dict | None:
        meta = self.datasets_dir / dataset_id / "meta.json"
        if not meta.exists():
            return None
        return json.loads(meta.read_text(encoding="utf-8"))

    def list_datasets(self) -> list[dict]:
        return [self.dataset_info(ds) for ds in self.dataset_ids()]

    def has_dataset(self, dataset_id: str) -> bool:
        return (self.datasets_dir / dataset_id / "meta.json").exists()

    def display_names(self) -> set[str]:
        return {info["display_name"] for info in self.list_datasets()}

    def add_dataset(
        self, dataset_id: str, display_name: str, fmt: str, text: str, origin: str
    ) -> dict:
        """Parse, persist and register one dataset; parse errors propagate."""
        if self.has_dataset(dataset_id):
            raise DuplicateDatasetError(f"dataset {dataset_id!r} already exists")
        if display_name in self.display_names():
            raise DuplicateDatasetError(f"dataset named {display_name!r} already exists")
        graph = formats.parse(text, fmt)

        ds_dir = self.datasets_dir / dataset_id
        ds_dir.mkdir(parents=True, exist_ok=True)
        atomic_write_text(ds_dir / f"original.{_EXT[fmt]}", text)
        self._write_graph_cache(ds_dir / "graph.npz", graph)
        info = {
            "dataset_id": dataset_id,
            "display_name": display_name,
            "format": fmt,
            "node_count": graph.node_count,
            "edge_count": graph.edge_count,
            "origin": origin,
        }
        atomic_write_json(ds_dir / "meta.json", info)
        with self._lock:
            self._graphs[dataset_id] = graph
        return info

    def seed_bundled(self) -> None:
        for dataset_id, spec in BUNDLED.items():
            if not self.has_dataset(dataset_id):
                self.add_dataset(
                    dataset_id,
                    spec["display_name"],
                    spec["format"],
                    bundled_text(dataset_id),
                    origin="preloaded",
                )

    def get_graph(self, dataset_id: str) -> tuple[Graph, str, float]:
        """The dataset's graph plus how it was obtained and the load time in ms.

        ``how`` is one of ``memoized``, ``binary-cache`` or ``parsed``;
        at most one parse per dataset per process.
        """
        with self._lock:
            graph = self._graphs.get(dataset_id)
            if graph is not None:
                return graph, "memoized", 0.0
            per_ds = self._graph_locks.setdefault(dataset_id, threading.Lock())
        with per_ds:
            with self._lock:
                graph = self._graphs.get(dataset_id)
                if graph is not None:
                    return graph, "memoized", 0.0
            started = time.perf_counter()
            ds_dir = self.datasets_dir / dataset_id
            cache = ds_dir / "graph.npz"
            if cache.exists():
                graph = self._read_graph_cache(cache)
                how = "binary-cache"
            else:
                info = self.dataset_info(dataset_id)
                if info is None:
                    raise KeyError(f"unknown dataset {dataset_id!r}")
                original = ds_dir / f"original.{_EXT[info['format']]}"
                graph = formats.parse(original.read_text(encoding="utf-8"), info["format"])
                how = "parsed"
            elapsed_ms = (time.perf_counter() - started) * 1000.0
            with self._lock:
                self._graphs[dataset_id] = graph
            return graph, how, elapsed_ms

    @staticmethod
    def _write_graph_cache(path: Path, g: Graph) -> None:
        tmp = path.with_name(path.name + ".tmp")
        with open(tmp, "wb") as fh:
            np.savez(
                fh,
                out_indptr=g.out_indptr,
                out_indices=g.out_indices,
                in_indptr=g.in_indptr,
                in_indices=g.in_indices,
                labels=np.array(g.labels, dtype=np.str_),
            )
        os.replace(tmp, path)

    @staticmethod
    def _read_graph_cache(path: Path) -> Graph:
        with np.load(path) as data:
            return Graph(
                data["out_indptr"],
                data["out_indices"],
                data["in_indptr"],
                data["in_indices"],
                tuple(str(s) for s in data["labels"]),
            )

    # -- query sets and task records ----------------------------------------

    def queryset_path(self, qs_id: str) -> Path:
        return self.querysets_dir / qs_id / "queryset.json"

    def ensure_queryset_dir(self, qs_id: str) -> None:
        (self.querysets_dir / qs_id / "tasks").mkdir(parents=True, exist_ok=True)

    def write_queryset(self, queryset: dict) -> None:
        self.ensure_queryset_dir(queryset["id"])
        atomic_write_json(self.queryset_path(queryset["id"]), queryset)

    def read_queryset(self, qs_id: str) -> dict | None:
        path = self.queryset_path(qs_id)
        if not path.exists():
            return None
        return json.loads(path.read_text(encoding="utf-8"))

    def task_path(self, qs_id: str, local_id: int) -> Path:
        return self.querysets_dir / qs_id / "tasks" / f"{local_id}.json"

    def write_task(self, record: dict) -> None:
        atomic_write_json(self.task_path(record["query_set_id"], record["local_id"]), record)

    def delete_task(self, qs_id: str, local_id: int) -> None:
        self.task_path(qs_id, local_id).unlink(missing_ok=True)

    def scan_querysets(self) -> list[tuple[dict, list[dict]]]:
        """All persisted query sets with their task records, for restart."""
        out = []
        for qs_dir in sorted(self.querysets_dir.iterdir()):
            queryset = self.read_queryset(qs_dir.name)
            if queryset is None:
                continue
            records = []
            tasks_dir = qs_dir / "tasks"
            if tasks_dir.exists():
                for task_file in sorted(tasks_dir.glob("*.json")):
                    records.append(json.loads(task_file.read_text(encoding="utf-8")))
            out.append((queryset, records))
        return out
