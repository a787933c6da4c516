"""FastAPI application wrapping the engine.

The engine is stateless and every computation is a pure function, so the
endpoints are safe for concurrent clients without locking.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import (
    InternalCheckError,
    LiecohError,
    UnknownNameError,
)
from . import handlers, models


def create_app() -> FastAPI:
    app = FastAPI(
        title="liecoh",
        description="Exact rational cohomology of finite-dimensional Lie algebras",
        version="0.1.0",
    )

    @app.exception_handler(LiecohError)
    async def _liecoh_error(request: Request, exc: LiecohError):
        if isinstance(exc, UnknownNameError):
            status = 404
        elif isinstance(exc, InternalCheckError):
            status = 500
        else:
            status = 422
        return JSONResponse(status_code=status, content={"detail": str(exc)})

    @app.get("/health", response_model=models.HealthResponse)
    def health():
        return models.HealthResponse(status="ok")

    @app.get("/catalog", response_model=models.CatalogListResponse)
    def catalog_list():
        return handlers.handle_catalog_list()

    @app.get("/catalog/{name}", response_model=models.CatalogResponse)
    def catalog_entry(name: str):
        return handlers.handle_catalog(name)

    @app.post("/check", response_model=models.CheckResponse)
    def check(req: models.CheckRequest):
        return handlers.handle_check(req)

    @app.post("/cohomology", response_model=models.CohomologyResponse)
    def cohomology(req: models.CohomologyRequest):
        return handlers.handle_cohomology(req)

    @app.post("/duality", response_model=models.DualityResponse)
    def duality(req: models.DualityRequest):
        return handlers.handle_duality(req)

    @app.post("/kunneth", response_model=models.KunnethResponse)
    def kunneth(req: models.KunnethRequest):
        return handlers.handle_kunneth(req)

    @app.post("/verify-theorem", response_model=models.TheoremResponse)
    def verify_theorem(req: models.TheoremRequest):
        return handlers.handle_theorem(req)

    @app.post("/verify-corollary", response_model=models.CorollaryResponse)
    def verify_corollary(req: models.CorollaryRequest):
        return handlers.handle_corollary(req)

    @app.post("/witness", response_model=models.WitnessResponse)
    def witness(req: models.WitnessRequest):
        return handlers.handle_witness(req)

    return app


app = create_app()
