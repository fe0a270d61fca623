"""HTTP surface: one POST endpoint per operation, stateless."""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import handlers, schemas
from .handlers import RequestError

app = FastAPI(
    title="facalc",
    version="0.1.0",
    description="Exact operational calculus on factorial polynomial series",
)


@app.exception_handler(RequestError)
async def _bad_request(_: Request, exc: RequestError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/phi")
def phi(req: schemas.PhiRequest) -> schemas.ValueResponse:
    return handlers.eval_phi(req)


@app.post("/series")
def series(req: schemas.SeriesRequest) -> schemas.SeriesResponse:
    return handlers.tabulate_series(req)


@app.post("/solve")
def solve(req: schemas.SolveRequest) -> schemas.SolveResponse:
    return handlers.solve_equation(req)


@app.post("/heat")
def heat(req: schemas.HeatRequest) -> schemas.HeatResponse:
    return handlers.heat(req)


@app.post("/nonhomo")
def nonhomo(req: schemas.FirstOrderRequest) -> schemas.FirstOrderResponse:
    return handlers.first_order(req)


@app.post("/verify-bessel")
def verify_bessel(req: schemas.BesselVerifyRequest) -> schemas.BesselVerifyResponse:
    return handlers.verify_bessel(req)


def run(host: str = "127.0.0.1", port: int = 8000) -> None:
    import uvicorn

    uvicorn.run(app, host=host, port=port)
