"""Service configuration from defaults, environment, or CLI flags."""
from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path


@dataclass
class ServiceConfig:
    data_dir: Path = Path("cyclerank-data")
    host: str = "127.0.0.1"
    port: int = 8080
    workers: int = 2
    max_upload_bytes: int = 32 * 1024 * 1024
    static_dir: Path | None = None
    seed_bundled: bool = True

    @classmethod
    def from_env(cls, **overrides) -> "ServiceConfig":
        env = os.environ
        values = {
            "data_dir": Path(env.get("CYCLERANK_DATA_DIR", "cyclerank-data")),
            "host": env.get("CYCLERANK_HOST", "127.0.0.1"),
            "port": int(env.get("CYCLERANK_PORT", "8080")),
            "workers": int(env.get("CYCLERANK_WORKERS", "2")),
            "max_upload_bytes": int(
                env.get("CYCLERANK_MAX_UPLOAD_BYTES", str(32 * 1024 * 1024))
            ),
        }
        static = env.get("CYCLERANK_STATIC_DIR")
        if static:
            values["static_dir"] = Path(static)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
