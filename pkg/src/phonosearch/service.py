"""HTTP/JSON facade over the engine.

Endpoints:
    POST   /tables/{name}/records            insert; 201 + data pointer
    GET    /tables/{name}/records/{p_value}  retrieve by pointer
    PUT    /tables/{name}/records/{p_value}  update (deindex + reindex)
    DELETE /tables/{name}/records/{p_value}  delete; idempotent 204
    GET    /search?q=&limit=&min_score=      ranked hits

Errors are JSON objects {"error": kind, "message": text} with kind drawn
from {validation, not_found, auth, storage, internal}. Mutations can be
guarded by a static bearer token; search and retrieval stay open. When a
built web UI is present its static bundle is served at /.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import Body, FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from phonosearch.engine import RecordSearchEngine
from phonosearch.errors import AuthError, EngineError, NotFoundError, ValidationError
from phonosearch.index import DataPointer

__all__ = ["ApiConfig", "create_app"]

_UI_DIR = Path(__file__).resolve().parents[2] / "frontend" / "dist"


@dataclass(slots=True)
class ApiConfig:
    """Service configuration; falls back to BIND_ADDR / DATA_DIR /
    API_TOKEN / DEFAULT_LIMIT environment variables."""

    bind_addr: str = field(default_factory=lambda: os.environ.get("BIND_ADDR", "127.0.0.1:8000"))
    data_dir: str = field(default_factory=lambda: os.environ.get("DATA_DIR", "./data"))
    api_token: str | None = field(default_factory=lambda: os.environ.get("API_TOKEN") or None)
    default_limit: int = field(
        default_factory=lambda: int(os.environ.get("DEFAULT_LIMIT", "50")))
    ui_dir: Path = _UI_DIR

    @property
    def host(self) -> str:
        return self.bind_addr.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.bind_addr.rsplit(":", 1)[1])


def _error(status: int, kind: str, message: str) -> JSONResponse:
    return JSONResponse({"error": kind, "message": message}, status_code=status)


_STATUS_FOR_KIND = {
    "validation": 400,
    "auth": 401,
    "not_found": 404,
    "storage": 500,
    "internal": 500,
}


def create_app(engine: RecordSearchEngine, config: ApiConfig | None = None) -> FastAPI:
    """Build the application around an already opened engine."""
    config = config or ApiConfig()
    app = FastAPI(title="phonosearch", version="0.1.0", openapi_url=None)
    app.state.engine = engine
    app.state.config = config

    @app.exception_handler(EngineError)
    async def engine_error(_req: Request, exc: EngineError) -> JSONResponse:
        return _error(_STATUS_FOR_KIND.get(exc.kind, 500), exc.kind, str(exc))

    @app.exception_handler(RequestValidationError)
    async def body_error(_req: Request, exc: RequestValidationError) -> JSONResponse:
        return _error(400, "validation", "malformed request body or parameters")

    def check_token(request: Request) -> None:
        if config.api_token is None:
            return
        header = request.headers.get("authorization", "")
        if header != f"Bearer {config.api_token}":
            raise AuthError("missing or invalid API token")

    def resolve_pointer(name: str, p_value: str) -> DataPointer:
        table = engine.registry.get_by_name(name)
        if table is None:
            raise NotFoundError(f"no such table {name!r}")
        if not p_value.isdigit():
            raise ValidationError(f"p_value must be a non-negative integer, got {p_value!r}")
        return DataPointer(table.id, int(p_value))

    def parse_values(body: object) -> list[str]:
        if not isinstance(body, list) or not all(isinstance(v, str) for v in body):
            raise ValidationError("body must be a JSON array of field value strings")
        return body

    @app.post("/tables/{name}/records", status_code=201)
    def insert_record(name: str, request: Request, body: list = Body(...)) -> dict:
        check_token(request)
        values = parse_values(body)
        table = engine.registry.get_by_name(name)
        if table is None:
            raise NotFoundError(f"no such table {name!r}")
        pointer = engine.insert(table.id, values)
        return {"table_id": pointer.table_id, "p_value": pointer.p_value}

    @app.get("/tables/{name}/records/{p_value}")
    def get_record(name: str, p_value: str) -> dict:
        pointer = resolve_pointer(name, p_value)
        record = engine.retrieve(pointer)
        if record is None:
            raise NotFoundError(f"no live record at ({pointer.table_id}, {pointer.p_value})")
        names = engine.registry.fields(pointer.table_id)
        return dict(zip(names, record.fields))

    @app.put("/tables/{name}/records/{p_value}")
    def update_record(name: str, p_value: str, request: Request,
                      body: list = Body(...)) -> dict:
        check_token(request)
        values = parse_values(body)
        pointer = resolve_pointer(name, p_value)
        engine.update(pointer, values)
        return {"table_id": pointer.table_id, "p_value": pointer.p_value}

    @app.delete("/tables/{name}/records/{p_value}", status_code=204)
    def delete_record(name: str, p_value: str, request: Request) -> Response:
        check_token(request)
        pointer = resolve_pointer(name, p_value)
        engine.delete(pointer)  # idempotent: deleting a ghost is still 204
        return Response(status_code=204)

    @app.get("/search")
    def search(q: str = "", limit: str | None = None, min_score: str | None = None) -> JSONResponse:
        try:
            limit_n = int(limit) if limit is not None else engine.default_limit
            min_score_n = int(min_score) if min_score is not None else 1
        except ValueError:
            raise ValidationError("limit and min_score must be integers")
        if limit_n < 1:
            raise ValidationError("limit must be at least 1")
        result = engine.search(q, limit=limit_n, min_score=min_score_n)
        if result.no_searchable_terms:
            raise ValidationError("no searchable terms")
        rows = [
            {
                "serial_no": i + 1,
                "matched_info": ", ".join(hit.matched_record.fields),
                "matched_percent": hit.score_percent,
                "pointer": {"table_id": hit.pointer.table_id,
                            "p_value": hit.pointer.p_value},
            }
            for i, hit in enumerate(result.hits)
        ]
        return JSONResponse(rows)

    if config.ui_dir.is_dir():
        app.mount("/", StaticFiles(directory=config.ui_dir, html=True), name="ui")
    else:
        @app.get("/")
        def root() -> dict:
            return {"service": "phonosearch", "endpoints": [
                "POST /tables/{name}/records",
                "GET /tables/{name}/records/{p_value}",
                "PUT /tables/{name}/records/{p_value}",
                "DELETE /tables/{name}/records/{p_value}",
                "GET /search?q=&limit=&min_score=",
            ]}

    return app
