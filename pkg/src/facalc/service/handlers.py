"""Transport-free request handlers: pydantic model in, pydantic model out.

The FastAPI app and the CLI both call these; semantic input problems raise
RequestError, which the transport layers map to HTTP 400 / exit code 2.
"""

from fractions import Fraction

from ..factorials import PoleError, falling_factorial, falling_factorial_real
from ..frobenius import indicial_polynomial, verified_solutions
from ..polynomials import Polynomial
from ..serialize import (
    FormatError,
    equation_from_json,
    format_rational,
    operator_to_json,
    parse_rational,
    polynomial_to_json,
    series_to_json,
)
from ..series import FactorialSeries, OrderError, eval_at_integer, eval_at_real
from ..solvers import (
    heat_propagate,
    heat_step_oracle,
    nonhomogeneous_general,
    particular_solution_by_linear_system,
)
from ..special import (
    bessel_series,
    exp_series,
    trig_series,
    verify_bessel_coefficient_recurrences,
    verify_bessel_difference_equation,
    verify_bessel_recurrences,
)
from . import schemas


class RequestError(ValueError):
    """Semantically invalid request."""


def _exact(value, what: str) -> Fraction:
    try:
        return parse_rational(value)
    except FormatError as exc:
        raise RequestError(f"{what}: {exc}") from exc


def _poly(values, what: str) -> Polynomial:
    try:
        return Polynomial(_exact(v, what) for v in values)
    except TypeError as exc:
        raise RequestError(f"{what}: {exc}") from exc


def eval_phi(req: schemas.PhiRequest) -> schemas.ValueResponse:
    if (req.n is None) == (req.nu is None):
        raise RequestError("give exactly one of n (integer index) or nu (real index)")
    if req.nu is not None:
        try:
            value = falling_factorial_real(float(req.x), float(req.nu))
        except (PoleError, ValueError, TypeError) as exc:
            raise RequestError(str(exc)) from exc
        return schemas.ValueResponse(value=value)
    if req.float_mode or isinstance(req.x, float):
        return schemas.ValueResponse(value=falling_factorial(float(req.x), req.n))
    x = _exact(req.x, "x")
    value = falling_factorial(x, req.n)
    return schemas.ValueResponse(value=format_rational(value))


def _build_series(req: schemas.SeriesRequest, order: int) -> FactorialSeries:
    if req.kind == "exp":
        if req.lam is None:
            raise RequestError("exp series needs lam")
        lam = float(req.lam) if req.float_mode or isinstance(req.lam, float) else _exact(req.lam, "lam")
        return exp_series(lam, order)
    if req.lam is not None:
        raise RequestError(f"{req.kind} series takes no lam")
    if req.kind in ("cos", "sin"):
        f = trig_series(req.kind, order)
    else:
        n = req.n if req.n is not None else 0
        if order < n:
            raise RequestError(f"order {order} cannot hold the leading index n={n}")
        f = bessel_series(n, order)
    if req.float_mode:
        f = FactorialSeries([float(c) for c in f.coeffs], exact=f.exact)
    return f


def tabulate_series(req: schemas.SeriesRequest) -> schemas.SeriesResponse:
    if req.n is not None and req.kind != "bessel":
        raise RequestError("n only applies to the bessel kind")
    columns = ["x", "value", "remainder"]
    if req.at is not None:
        if req.points is not None:
            raise RequestError("give points or at, not both")
        if req.order is None:
            if req.kind == "bessel":
                raise RequestError(
                    "bessel evaluation away from the integers needs an explicit "
                    "order: the truncated tail is not negligible by default"
                )
            order = 40
        else:
            order = req.order
        f = _build_series(req, order)
        value, rem = eval_at_real(f, req.at, order)
        row = schemas.SeriesRow(x=req.at, value=value, remainder=rem)
        return schemas.SeriesResponse(kind=req.kind, order=order, columns=columns, rows=[row])

    points = req.points if req.points is not None else list(range(9))
    if not points:
        raise RequestError("empty points list")
    if min(points) < 0:
        raise RequestError("integer points must be non-negative")
    order = req.order if req.order is not None else max(points) + (req.n or 0)
    f = _build_series(req, order)
    rows = []
    for m in points:
        try:
            value = eval_at_integer(f, m)
        except OrderError as exc:
            raise RequestError(str(exc)) from exc
        if f.is_rational:
            rows.append(schemas.SeriesRow(x=m, value=format_rational(value), remainder="0"))
        else:
            rows.append(schemas.SeriesRow(x=m, value=float(value), remainder=0.0))
    return schemas.SeriesResponse(kind=req.kind, order=order, columns=columns, rows=rows)


def solve_equation(req: schemas.SolveRequest) -> schemas.SolveResponse:
    try:
        eq = equation_from_json(req.equation.model_dump())
    except FormatError as exc:
        raise RequestError(str(exc)) from exc
    if not eq.is_homogeneous():
        raise RequestError("solve handles homogeneous equations; rhs must be zero")
    try:
        op, s, solutions, report = verified_solutions(eq, req.order, req.points)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc
    indicial = indicial_polynomial(op)
    sol_models = []
    verified = False
    for sol in solutions:
        res = report.get(sol.root)
        model = schemas.SolutionModel(
            root=format_rational(sol.root),
            coeffs=[format_rational(c) for c in sol.coeffs],
            formal=sol.formal,
            series=schemas.SeriesModel(**series_to_json(sol.series))
            if sol.series is not None
            else None,
            residual=format_rational(res) if isinstance(res, Fraction) else None,
        )
        sol_models.append(model)
        if isinstance(res, Fraction) and res == 0:
            verified = True
    failures = {
        format_rational(root): text
        for root, text in report.items()
        if isinstance(text, str) and text != "formal"
    }
    return schemas.SolveResponse(
        operator=schemas.OperatorModel(**operator_to_json(op)),
        shift=s,
        indicial=polynomial_to_json(indicial),
        roots=[format_rational(r) for r in report],
        solutions=sol_models,
        failures=failures,
        verified=verified,
    )


def heat(req: schemas.HeatRequest) -> schemas.HeatResponse:
    w = _poly(req.initial, "initial")
    result = heat_propagate(w, req.steps)
    agrees = None
    if req.verify:
        agrees = result == heat_step_oracle(w, req.steps)
    return schemas.HeatResponse(result=polynomial_to_json(result), oracle_agrees=agrees)


def first_order(req: schemas.FirstOrderRequest) -> schemas.FirstOrderResponse:
    a = _exact(req.a, "a")
    b = _exact(req.b, "b")
    g = _poly(req.g, "g")
    points = tuple(req.points) if req.points is not None else tuple(range(11))
    if not points:
        raise RequestError("empty points list")
    try:
        rep = nonhomogeneous_general(a, b, g, points)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc
    agrees = None
    if req.verify:
        agrees = rep.particular == particular_solution_by_linear_system(a, b, g)
    return schemas.FirstOrderResponse(
        y_p=polynomial_to_json(rep.particular),
        homogeneous_base=format_rational(rep.homogeneous_base),
        residual=format_rational(rep.residual),
        oracle_agrees=agrees,
    )


def verify_bessel(req: schemas.BesselVerifyRequest) -> schemas.BesselVerifyResponse:
    points = req.points if req.points is not None else list(range(2, 13))
    try:
        step_res, index_res = verify_bessel_recurrences(req.n, points)
        eq_res, structure = verify_bessel_difference_equation(
            req.n, [m for m in points if m >= 2] or [2]
        )
        coeff_ok = verify_bessel_coefficient_recurrences(max(req.n, 1), 24)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc
    ok = step_res == 0 and index_res == 0 and eq_res == 0 and structure and coeff_ok
    return schemas.BesselVerifyResponse(
        n=req.n,
        forward_step_residual=format_rational(step_res),
        index_relation_residual=format_rational(index_res),
        equation_residual=format_rational(eq_res),
        structure_matches=structure,
        coefficient_identities=coeff_ok,
        ok=ok,
    )
