"""HTTP/JSON gateway in front of the task orchestrator.

Endpoints:

    POST   /api/querysets                         submit a query set
    GET    /api/querysets/{id}/status             per-task status
    GET    /api/querysets/{id}/results            per-task records (permalink)
    DELETE /api/querysets/{id}                    clear all queries
    DELETE /api/querysets/{id}/queries/{local_id} delete one query
    GET    /api/datasets                          list datasets
    POST   /api/datasets                          upload (multipart: name, format, file)

Responses carry the query set id so any view can be permalinked.  When
configured with a static directory the compiled dashboard is served
from it at the root path.
"""
from __future__ import annotations

from contextlib import asynccontextmanager

from fastapi import FastAPI, File, Form, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from ..exceptions import GraphFormatError
from ..formats import FORMATS
from .config import ServiceConfig
from .scheduler import Orchestrator, validate_queries
from .store import DataStore, DuplicateDatasetError


class QueryIn(BaseModel):
    dataset_id: str
    algorithm: str
    source: str | None = None
    parameters: dict = Field(default_factory=dict)
    top_k: int = 50


class QuerySetIn(BaseModel):
    queries: list[QueryIn]


def _slug(name: str) -> str:
    cleaned = "".join(c.lower() if c.isalnum() else "-" for c in name.strip())
    slug = "-".join(part for part in cleaned.split("-") if part)
    return slug or "dataset"


def _not_found(detail: str) -> JSONResponse:
    return JSONResponse(status_code=404, content={"error": detail})


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig.from_env()
    store = DataStore(config.data_dir)
    orchestrator = Orchestrator(store, workers=config.workers)

    @asynccontextmanager
    async def lifespan(_app: FastAPI):
        if config.seed_bundled:
            store.seed_bundled()
        orchestrator.recover()
        orchestrator.start()
        yield
        orchestrator.stop()

    app = FastAPI(title="cyclerank service", lifespan=lifespan)
    app.state.config = config
    app.state.orchestrator = orchestrator
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.get("/api/datasets")
    def list_datasets():
        return store.list_datasets()

    @app.post("/api/datasets")
    async def upload_dataset(
        name: str = Form(...),
        format: str = Form(...),
        file: UploadFile = File(...),
    ):
        if format not in FORMATS:
            return JSONResponse(
                status_code=400,
                content={"error": f"unknown format {format!r}; expected one of {list(FORMATS)}"},
            )
        payload = await file.read()
        if len(payload) > config.max_upload_bytes:
            return JSONResponse(
                status_code=413,
                content={"error": f"upload exceeds {config.max_upload_bytes} bytes"},
            )
        try:
            text = payload.decode("utf-8")
        except UnicodeDecodeError as exc:
            return JSONResponse(status_code=400, content={"error": f"not UTF-8: {exc}"})
        try:
            info = store.add_dataset(_slug(name), name, format, text, origin="uploaded")
        except DuplicateDatasetError as exc:
            return JSONResponse(status_code=409, content={"error": str(exc)})
        except GraphFormatError as exc:
            return JSONResponse(status_code=400, content={"error": str(exc)})
        return JSONResponse(status_code=201, content=info)

    @app.post("/api/querysets")
    def submit_queryset(body: QuerySetIn):
        if not body.queries:
            return JSONResponse(status_code=400, content={"error": "query set is empty"})
        drafts = [q.model_dump() for q in body.queries]
        canonical, errors = validate_queries(store, drafts)
        if errors:
            return JSONResponse(status_code=400, content={"errors": errors})
        queryset = orchestrator.submit(canonical)
        return JSONResponse(status_code=201, content=queryset)

    @app.get("/api/querysets/{qs_id}/status")
    def queryset_status(qs_id: str):
        tasks = orchestrator.status(qs_id)
        if tasks is None:
            return _not_found(f"unknown query set {qs_id}")
        return {"id": qs_id, "tasks": tasks}

    @app.get("/api/querysets/{qs_id}/results")
    def queryset_results(qs_id: str):
        records = orchestrator.results(qs_id)
        if records is None:
            return _not_found(f"unknown query set {qs_id}")
        return {"id": qs_id, "tasks": records}

    @app.delete("/api/querysets/{qs_id}")
    def clear_queryset(qs_id: str):
        queryset = orchestrator.clear(qs_id)
        if queryset is None:
            return _not_found(f"unknown query set {qs_id}")
        return queryset

    @app.delete("/api/querysets/{qs_id}/queries/{local_id}")
    def delete_query(qs_id: str, local_id: int):
        try:
            queryset = orchestrator.delete_query(qs_id, local_id)
        except KeyError:
            return _not_found(f"query set {qs_id} has no query {local_id}")
        if queryset is None:
            return _not_found(f"unknown query set {qs_id}")
        return queryset

    if config.static_dir is not None and config.static_dir.is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="dashboard")

    return app


def serve(config: ServiceConfig) -> None:
    import uvicorn

    uvicorn.run(create_app(config), host=config.host, port=config.port, log_level="warning")
