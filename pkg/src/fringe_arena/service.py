"""HTTP service wrapping the core engine.

Stateless by design: every request carries or defaults all parameters, and
handlers are pure functions of (request, loaded config), so concurrent
requests need no coordination. Responses are rendered through the canonical
serializer so they are byte-identical to the CLI output for the same inputs.

Error contract: malformed requests (bad JSON, wrong types, unknown enum
values) return 400 with field-level messages; semantically invalid values
(e.g. a coefficient ordering violation) return 422.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from pydantic import BaseModel, Field

from . import arbiter, serialize
from .config import ConfigError, RunConfig
from .game import GameParameters, Strategy, StrategyProfile
from .serialize import canonical_json

JSON_MEDIA = "application/json"


class RoundRequest(BaseModel):
    """Body of POST /round; lambda and mode fall back to the loaded config."""

    alice: str
    bob: str
    wavelength: float | None = Field(default=None, alias="lambda")
    mode: str | None = None

    model_config = {"populate_by_name": True, "extra": "forbid"}


def _bad_request(field: str, message: str) -> HTTPException:
    return HTTPException(status_code=400, detail=[{"field": field, "message": message}])


def _parse_strategy(field: str, value: str) -> Strategy:
    try:
        return Strategy.parse(value)
    except ValueError as exc:
        raise _bad_request(field, str(exc))


def _parse_profile_query(text: str) -> StrategyProfile:
    try:
        return StrategyProfile.parse(text)
    except ValueError as exc:
        raise _bad_request("profile", str(exc))


def _json(payload) -> Response:
    return Response(content=canonical_json(payload), media_type=JSON_MEDIA)


def create_app(config: RunConfig, ui_dir: str | None = None) -> FastAPI:
    """Build the service app; `ui_dir` optionally mounts a built web client at /
    so the browser and the API share one origin."""
    app = FastAPI(
        title="fringe-arena",
        description="Multi-slit diffraction Prisoners' Dilemma service",
        version="0.1.0",
    )

    @app.exception_handler(RequestValidationError)
    async def malformed_request(request: Request, exc: RequestValidationError):
        detail = [
            {
                "field": ".".join(str(loc) for loc in err.get("loc", []) if loc != "body"),
                "message": err.get("msg", "invalid"),
            }
            for err in exc.errors()
        ]
        return Response(
            content=canonical_json({"detail": detail}),
            status_code=400,
            media_type=JSON_MEDIA,
        )

    @app.exception_handler(HTTPException)
    async def http_error(request: Request, exc: HTTPException):
        return Response(
            content=canonical_json({"detail": exc.detail}),
            status_code=exc.status_code,
            media_type=JSON_MEDIA,
        )

    def domain(call):
        """Run a core call, mapping domain validation errors to 422."""
        try:
            return call()
        except (ConfigError, ValueError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/config")
    def get_config() -> Response:
        return _json(config.to_dict())

    @app.post("/round")
    def post_round(body: RoundRequest) -> Response:
        profile = StrategyProfile(
            _parse_strategy("alice", body.alice),
            _parse_strategy("bob", body.bob),
        )
        if body.mode is not None and body.mode not in (arbiter.MODE_DIRECT, arbiter.MODE_MEASURED):
            raise _bad_request("mode", f"mode must be direct or measured, got {body.mode!r}")
        if body.wavelength is not None and body.wavelength < 0:
            raise HTTPException(status_code=422, detail=f"lambda must be >= 0, got {body.wavelength}")
        apparatus = domain(lambda: config.apparatus(body.wavelength, body.mode))
        outcome = domain(lambda: arbiter.play_round(profile, apparatus))
        return _json(serialize.outcome_dict(outcome, apparatus.params, apparatus.payoff_mode))

    @app.get("/pattern")
    def get_pattern(
        profile: str = Query(default="C,C"),
        wavelength: float | None = Query(default=None, alias="lambda"),
        open: str | None = Query(default=None, alias="open"),
    ) -> Response:
        parsed = _parse_profile_query(profile)
        lam = config.lam if wavelength is None else wavelength
        if lam <= 0:
            raise HTTPException(status_code=422, detail=f"pattern simulation needs lambda > 0, got {lam}")
        open_tags = None
        if open is not None:
            open_tags = {tag.strip() for tag in open.split(",") if tag.strip()}
        bundle = domain(lambda: arbiter.pattern_bundle(parsed, config.apparatus(lam), open_tags))
        return _json(
            serialize.pattern_dict(
                bundle.pattern,
                lam,
                parsed,
                bundle.window.slits,
                bundle.state.open_flags,
                bundle.peaks,
                bundle.used_peaks,
                bundle.measurement,
            )
        )

    @app.get("/sweep")
    def get_sweep(
        lo: float | None = Query(default=None),
        hi: float | None = Query(default=None),
        steps: int | None = Query(default=None),
    ) -> Response:
        lo_v = config.sweep_lo if lo is None else lo
        hi_v = config.sweep_hi if hi is None else hi
        steps_v = config.sweep_steps if steps is None else steps
        result = domain(lambda: arbiter.sweep_lambda(lo_v, hi_v, steps_v, config.coeffs(), config.k))
        return _json(serialize.sweep_dict(result, config.coeffs(), config.k))

    @app.get("/equilibrium")
    def get_equilibrium(
        wavelength: float | None = Query(default=None, alias="lambda"),
    ) -> Response:
        lam = config.lam if wavelength is None else wavelength
        coeffs = config.coeffs()
        params = domain(lambda: GameParameters(coeffs, lam, config.k))
        classification = arbiter.classify_regime(params)
        return _json(
            serialize.thresholds_dict(
                coeffs,
                config.k,
                arbiter.defection_threshold(coeffs, config.k),
                arbiter.cooperation_threshold(coeffs, config.k),
                wavelength=lam,
                classification=classification,
            )
        )

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        # mounted last so the API routes above keep precedence
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
