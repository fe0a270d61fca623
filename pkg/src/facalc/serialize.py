"""JSON wire formats.

Exact rationals travel as strings ("3/4", "-2") so nothing is lost to binary
floating point; float-backend series coefficients travel as JSON numbers with
a fractional part. Mixing the two in one coefficient list is rejected.
"""

from fractions import Fraction
from typing import Sequence

from .frobenius import FrobeniusSolution
from .polynomials import Polynomial
from .series import FactorialSeries
from .weyl import DifferenceEquation, WeylOperator


class FormatError(ValueError):
    """Malformed wire data."""


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def parse_rational(text) -> Fraction:
    if isinstance(text, float):
        raise FormatError("exact slots take strings or integers, not floats")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(f"not a rational: {text!r}") from exc


def polynomial_to_json(p: Polynomial) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


def polynomial_from_json(data: Sequence) -> Polynomial:
    if not isinstance(data, (list, tuple)):
        raise FormatError("polynomial must be a list of rational strings")
    return Polynomial(parse_rational(c) for c in data)


def series_to_json(f: FactorialSeries) -> dict:
    if f.is_rational:
        coeffs = [format_rational(c) for c in f.coeffs]
    else:
        coeffs = [float(c) for c in f.coeffs]
    return {"basis": "factorial", "coeffs": coeffs, "exact": f.exact, "order": f.order}


def series_from_json(data: dict) -> FactorialSeries:
    if not isinstance(data, dict):
        raise FormatError("series must be an object")
    if data.get("basis", "factorial") != "factorial":
        raise FormatError(f"unsupported basis {data.get('basis')!r}")
    raw = data.get("coeffs")
    if not isinstance(raw, list):
        raise FormatError("series needs a coeffs list")
    floats = [isinstance(c, float) for c in raw]
    if any(floats):
        if any(isinstance(c, str) for c in raw):
            raise FormatError("coefficient list mixes float and rational entries")
        coeffs = [float(c) for c in raw]
    else:
        coeffs = [parse_rational(c) for c in raw]
    exact = bool(data.get("exact", False))
    f = FactorialSeries(coeffs, exact=exact)
    declared = data.get("order")
    if declared is not None and not exact and declared != f.order:
        raise FormatError(f"declared order {declared} != coefficient count - 1")
    return f


def equation_to_json(eq: DifferenceEquation) -> dict:
    return {
        "terms": [
            {"shift": j, "poly": polynomial_to_json(p)} for j, p in eq.terms
        ],
        "rhs": polynomial_to_json(eq.rhs),
    }


def equation_from_json(data: dict) -> DifferenceEquation:
    if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
        raise FormatError("equation needs a terms list")
    terms = {}
    for entry in data["terms"]:
        if not isinstance(entry, dict) or "shift" not in entry or "poly" not in entry:
            raise FormatError("each term needs shift and poly")
        shift = entry["shift"]
        if not isinstance(shift, int) or isinstance(shift, bool):
            raise FormatError(f"shift must be an integer, got {shift!r}")
        poly = polynomial_from_json(entry["poly"])
        terms[shift] = terms.get(shift, Polynomial.zero()) + poly
    rhs = polynomial_from_json(data.get("rhs", []))
    try:
        return DifferenceEquation(terms, rhs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def operator_to_json(a: WeylOperator) -> dict:
    return {
        "terms": [
            {"raising": i, "difference": j, "coeff": format_rational(c)}
            for (i, j), c in a.terms
        ]
    }


def operator_from_json(data: dict) -> WeylOperator:
    if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
        raise FormatError("operator needs a terms list")
    terms = {}
    for entry in data["terms"]:
        try:
            key = (int(entry["raising"]), int(entry["difference"]))
            coeff = parse_rational(entry["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad operator term {entry!r}") from exc
        if key[0] < 0 or key[1] < 0:
            raise FormatError(f"operator powers must be non-negative, got {entry!r}")
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return WeylOperator(terms)


def solution_to_json(sol: FrobeniusSolution) -> dict:
    out = {
        "root": format_rational(sol.root),
        "coeffs": [format_rational(c) for c in sol.coeffs],
        "indicial": polynomial_to_json(sol.indicial),
        "formal": sol.formal,
    }
    if sol.series is not None:
        out["series"] = series_to_json(sol.series)
    if sol.self_residual is not None:
        out["residual"] = format_rational(sol.self_residual)
    return out
