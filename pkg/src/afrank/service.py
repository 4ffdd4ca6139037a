"""Stateless JSON solve service.

Every request carries its own framework, so requests are independent and
the service can run them concurrently. Long enumerations check a
cooperative per-request deadline; an expired deadline produces a 504 with a
partial-status body instead of tearing anything down.
"""

from __future__ import annotations

import json
import time
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.concurrency import run_in_threadpool
from fastapi.middleware.cors import CORSMiddleware

from .framework import (
    BudgetExceededError,
    Deadline,
    DEFAULT_MAX_ARGS,
    ParseError,
    SizeLimitError,
)
from .solve import RequestError, solve


def _json_response(obj: dict, status_code: int = 200) -> Response:
    body = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return Response(content=body, status_code=status_code, media_type="application/json")


def create_app(
    max_args: int = DEFAULT_MAX_ARGS,
    timeout_ms: int | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="afrank solve service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/healthz")
    def healthz() -> Response:
        return Response(content="ok", media_type="text/plain")

    @app.post("/api/solve")
    async def api_solve(request: Request) -> Response:
        raw = await request.body()
        try:
            body = json.loads(raw)
        except json.JSONDecodeError as exc:
            return _json_response({"error": f"invalid JSON body: {exc}"}, 400)

        deadline = Deadline(timeout_ms / 1000.0) if timeout_ms is not None else None
        started = time.perf_counter()
        try:
            # run in the threadpool so slow enumerations don't block other requests
            payload = await run_in_threadpool(
                solve, body, max_args_cap=max_args, deadline=deadline
            )
        except SizeLimitError as exc:
            return _json_response({"error": str(exc)}, 413)
        except (RequestError, ParseError) as exc:
            return _json_response({"error": str(exc)}, 400)
        except BudgetExceededError as exc:
            return _json_response(
                {"error": str(exc), "partial": True, "timeout_ms": timeout_ms}, 504
            )
        payload["timing_ms"] = int((time.perf_counter() - started) * 1000)
        return _json_response(payload)

    if static_dir is not None and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def serve(
    port: int = 8000,
    max_args: int = DEFAULT_MAX_ARGS,
    timeout_ms: int | None = None,
    host: str = "127.0.0.1",
    static_dir: str | Path | None = None,
) -> None:
    import uvicorn

    app = create_app(max_args=max_args, timeout_ms=timeout_ms, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")
