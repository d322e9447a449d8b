"""Stateless HTTP facade over the engine.

Games travel inside each request, so any instance can answer any call and
there is no persistence to corrupt. Responses reuse the exact serializers
the CLI uses; the two surfaces must agree bit for bit on identical inputs.

Status codes: 400 for bodies that are not JSON, 422 for semantic problems
(bad documents, cap or time-budget refusals), 200 otherwise.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.concurrency import run_in_threadpool
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .bundled import fixture_names, fixture_text
from .documents import (
    DocumentError,
    DocumentSemanticError,
    engine_info,
    evaluation_to_document,
    game_from_document,
    partition_from_document,
    report_to_document,
    core_result_to_document,
    coalition_labels,
    conventions,
)
from .model import Game, GameValidationError, Partition, PartitionError
from .search import CapExceeded, TimeBudgetExceeded, compute_core
from .stability import ALL_NOTIONS, Notion, certify, find_blocking_coalition

DEFAULT_CORE_TIME_BUDGET_S = 10.0


class _BadRequest(Exception):
    def __init__(self, message: str):
        self.message = message


def _notions_from(body: dict) -> tuple[Notion, ...]:
    if "notions" not in body or body["notions"] is None:
        return ALL_NOTIONS
    raw = body["notions"]
    if not isinstance(raw, list) or not raw:
        raise DocumentSemanticError("expected a nonempty list of notion tags", "$.notions")
    notions = []
    for k, tag in enumerate(raw):
        try:
            notions.append(Notion(tag))
        except ValueError:
            known = ", ".join(n.value for n in ALL_NOTIONS)
            raise DocumentSemanticError(
                f"unknown notion {tag!r} (known: {known})", f"$.notions[{k}]"
            ) from None
    return tuple(notions)


def _game_and_partition(body: dict, extra_fields: set[str] = frozenset()) -> tuple[Game, Partition]:
    allowed = {"game", "partition"} | extra_fields
    for key in body:
        if key not in allowed:
            raise DocumentSemanticError(f"unknown field {key!r}", f"$.{key}")
    if "game" not in body:
        raise DocumentSemanticError('missing "game" field', "$")
    if "partition" not in body:
        raise DocumentSemanticError('missing "partition" field', "$")
    game = game_from_document(body["game"])
    partition = partition_from_document(body["partition"], game)
    return game, partition


def create_app(*, core_time_budget_s: float = DEFAULT_CORE_TIME_BUDGET_S) -> FastAPI:
    app = FastAPI(title="hedonic-games", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    async def read_body(request: Request) -> dict:
        raw = await request.body()
        try:
            body = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise _BadRequest(f"malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})")
        if not isinstance(body, dict):
            raise _BadRequest("request body must be a JSON object")
        return body

    @app.exception_handler(_BadRequest)
    async def bad_request_handler(request: Request, exc: _BadRequest):
        return JSONResponse({"error": exc.message}, status_code=400)

    @app.exception_handler(DocumentError)
    async def document_error_handler(request: Request, exc: DocumentError):
        payload = {"error": str(exc)}
        if isinstance(exc, DocumentSemanticError):
            payload["path"] = exc.path
        return JSONResponse(payload, status_code=422)

    @app.exception_handler(GameValidationError)
    async def game_error_handler(request: Request, exc: GameValidationError):
        return JSONResponse({"error": str(exc)}, status_code=422)

    @app.exception_handler(PartitionError)
    async def partition_error_handler(request: Request, exc: PartitionError):
        return JSONResponse({"error": str(exc)}, status_code=422)

    @app.exception_handler(CapExceeded)
    async def cap_handler(request: Request, exc: CapExceeded):
        return JSONResponse({"error": str(exc)}, status_code=422)

    @app.exception_handler(TimeBudgetExceeded)
    async def budget_handler(request: Request, exc: TimeBudgetExceeded):
        return JSONResponse({"error": str(exc), "partial": False}, status_code=422)

    # engine calls run in the threadpool so a slow request cannot stall the
    # event loop for everyone else; each request is independent and pure

    @app.post("/api/evaluate")
    async def evaluate(request: Request):
        game, partition = _game_and_partition(await read_body(request))
        doc = await run_in_threadpool(evaluation_to_document, game, partition)
        return JSONResponse(doc)

    @app.post("/api/certify")
    async def certify_endpoint(request: Request):
        body = await read_body(request)
        notions = _notions_from(body)
        game, partition = _game_and_partition(body, extra_fields={"notions"})
        report = await run_in_threadpool(certify, game, partition, notions)
        return JSONResponse(report_to_document(game, report))

    @app.post("/api/blocking")
    async def blocking(request: Request):
        game, partition = _game_and_partition(await read_body(request))
        blocker = await run_in_threadpool(find_blocking_coalition, game, partition)
        return JSONResponse(
            {
                "blocking_coalition": None if blocker is None else coalition_labels(game, blocker),
                "conventions": conventions(game),
            }
        )

    @app.post("/api/core")
    async def core(request: Request):
        body = await read_body(request)
        for key in body:
            if key != "game":
                raise DocumentSemanticError(f"unknown field {key!r}", f"$.{key}")
        if "game" not in body:
            raise DocumentSemanticError('missing "game" field', "$")
        game = game_from_document(body["game"])
        result = await run_in_threadpool(compute_core, game, time_budget_s=core_time_budget_s)
        return JSONResponse(core_result_to_document(result))

    @app.get("/api/examples")
    async def examples():
        return JSONResponse(
            {
                "examples": [
                    {"name": name, "game": json.loads(fixture_text(name))}
                    for name in fixture_names()
                ]
            }
        )

    @app.get("/api/health")
    async def health():
        return JSONResponse(engine_info(core_time_budget_s))

    return app


def serve(port: int, host: str = "127.0.0.1", *, core_time_budget_s: float = DEFAULT_CORE_TIME_BUDGET_S) -> None:
    """Run the service until interrupted."""
    import uvicorn

    uvicorn.run(create_app(core_time_budget_s=core_time_budget_s), host=host, port=port)
