"""Command-line client for the service layer.

Every subcommand builds the same request model the HTTP endpoint takes and
either calls the handler in process (default) or POSTs it to a running server
(--server URL). Exit codes: 0 success, 2 invalid input, 3 verification failure.
"""

import argparse
import json
import sys
import urllib.error
import urllib.request
from pathlib import Path

from pydantic import ValidationError

from .service import handlers, schemas
from .service.handlers import RequestError

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_VERIFY_FAILED = 3

_ENDPOINTS = {
    "phi": (schemas.PhiRequest, handlers.eval_phi),
    "series": (schemas.SeriesRequest, handlers.tabulate_series),
    "solve": (schemas.SolveRequest, handlers.solve_equation),
    "heat": (schemas.HeatRequest, handlers.heat),
    "nonhomo": (schemas.FirstOrderRequest, handlers.first_order),
    "verify-bessel": (schemas.BesselVerifyRequest, handlers.verify_bessel),
}


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _call(endpoint: str, payload: dict, server: str | None) -> dict:
    """Run one request, in process or against a remote server."""
    if server:
        url = server.rstrip("/") + "/" + endpoint
        data = json.dumps(payload).encode()
        req = urllib.request.Request(
            url, data=data, headers={"Content-Type": "application/json"}
        )
        try:
            with urllib.request.urlopen(req) as resp:
                return json.loads(resp.read())
        except urllib.error.HTTPError as exc:
            detail = exc.read().decode(errors="replace")
            raise CliError(f"server rejected the request ({exc.code}): {detail}")
        except urllib.error.URLError as exc:
            raise CliError(f"cannot reach {server}: {exc.reason}")
    model_cls, handler = _ENDPOINTS[endpoint]
    try:
        request = model_cls.model_validate(payload)
    except ValidationError as exc:
        raise CliError(str(exc))
    try:
        return handler(request).model_dump()
    except RequestError as exc:
        raise CliError(str(exc))


def _parse_points(text: str) -> list[int]:
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise CliError(f"cannot parse points {text!r}; use 'a..b' or 'a,b,c'")


def _load_json_arg(text: str):
    """Inline JSON if it looks like JSON, otherwise a file path."""
    stripped = text.strip()
    if stripped.startswith(("{", "[")):
        try:
            return json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise CliError(f"inline JSON is malformed: {exc}")
    path = Path(text)
    if not path.exists():
        raise CliError(f"no such file: {text}")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CliError(f"{text}: malformed JSON: {exc}")


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _emit_rows(doc: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, indent=2))
        return
    print(",".join(doc["columns"]))
    for row in doc["rows"]:
        print(",".join(str(row[c]) for c in doc["columns"]))


def cmd_eval_phi(args) -> int:
    payload = {"x": _number_or_string(args.x), "float_mode": args.float}
    if args.n is not None:
        payload["n"] = args.n
    if args.nu is not None:
        payload["nu"] = args.nu
    doc = _call("phi", payload, args.server)
    print(doc["value"])
    return EXIT_OK


def cmd_series(args) -> int:
    payload = {"kind": args.kind, "float_mode": args.float}
    if args.lam is not None:
        payload["lam"] = _number_or_string(args.lam)
    if args.n is not None:
        payload["n"] = args.n
    if args.order is not None:
        payload["order"] = args.order
    if args.points is not None:
        payload["points"] = _parse_points(args.points)
    if args.at is not None:
        payload["at"] = args.at
    doc = _call("series", payload, args.server)
    _emit_rows(doc, args.json)
    return EXIT_OK


def cmd_solve(args) -> int:
    equation = _load_json_arg(args.equation)
    payload = {"equation": equation, "order": args.order}
    if args.points is not None:
        payload["points"] = _parse_points(args.points)
    doc = _call("solve", payload, args.server)
    _emit(doc)
    if not doc["verified"]:
        print("no residual-verified solution", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_heat(args) -> int:
    initial = _load_json_arg(args.initial)
    payload = {"initial": initial, "steps": args.steps, "verify": args.verify}
    doc = _call("heat", payload, args.server)
    _emit(doc)
    if args.verify and doc["oracle_agrees"] is not True:
        print("stepping oracle disagrees", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_nonhomo(args) -> int:
    payload = {
        "a": args.a,
        "b": args.b,
        "g": _load_json_arg(args.g),
        "verify": args.verify,
    }
    if args.points is not None:
        payload["points"] = _parse_points(args.points)
    doc = _call("nonhomo", payload, args.server)
    _emit(doc)
    bad_residual = doc["residual"] not in ("0", 0, 0.0)
    disagrees = args.verify and doc["oracle_agrees"] is not True
    if bad_residual or disagrees:
        print("verification failed", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_verify_bessel(args) -> int:
    payload = {"n": args.n}
    if args.points is not None:
        payload["points"] = _parse_points(args.points)
    doc = _call("verify-bessel", payload, args.server)
    _emit(doc)
    if not doc["ok"]:
        print("identity verification failed", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service.app import run

    run(host=args.host, port=args.port)
    return EXIT_OK


def _number_or_string(text: str):
    """Keep exact-looking input as strings, pass decimals through as floats."""
    try:
        int(text)
        return text
    except ValueError:
        pass
    if "/" in text:
        return text
    try:
        return float(text)
    except ValueError:
        return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facalc",
        description="Exact calculus on factorial polynomial series",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--server", help="base URL of a running service instead of in-process execution")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--csv", action="store_true", help="CSV output where tabular")

    p = sub.add_parser("eval-phi", help="evaluate a falling factorial")
    p.add_argument("--x", required=True, help="evaluation point (integer, p/q, or decimal)")
    p.add_argument("--n", type=int, help="non-negative integer index (exact)")
    p.add_argument("--nu", type=float, help="real index (gamma-ratio route)")
    p.add_argument("--float", action="store_true", help="compute in floating point")
    common(p)
    p.set_defaults(func=cmd_eval_phi)

    p = sub.add_parser("series", help="tabulate a named series")
    p.add_argument("--kind", required=True, choices=["exp", "cos", "sin", "bessel"])
    p.add_argument("--lam", help="parameter for the exp kind")
    p.add_argument("--n", type=int, help="index for the bessel kind")
    p.add_argument("--order", type=int, help="truncation order")
    p.add_argument("--points", help="integer points, 'a..b' or comma list (default 0..8)")
    p.add_argument("--at", type=float, help="single real evaluation point")
    p.add_argument("--float", action="store_true", help="float backend")
    common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("solve", help="series solutions of a homogeneous difference equation")
    p.add_argument("equation", help="equation JSON, inline or a file path")
    p.add_argument("--order", type=int, default=12, help="series truncation order")
    p.add_argument("--points", help="residual check points")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("heat", help="propagate polynomial data m steps")
    p.add_argument("--initial", required=True, help="polynomial coefficients JSON, inline or file")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="cross-check with the stepping oracle")
    common(p)
    p.set_defaults(func=cmd_heat)

    p = sub.add_parser("nonhomo", help="solve a y(x+1) + b y(x) = g(x) for polynomial g")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--g", required=True, help="coefficients of g, JSON list inline or file")
    p.add_argument("--points", help="residual check points (default 0..10)")
    p.add_argument("--verify", action="store_true", help="cross-check with the linear-system oracle")
    common(p)
    p.set_defaults(func=cmd_nonhomo)

    p = sub.add_parser("verify-bessel", help="verify the discrete Bessel identities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", help="integer points (default 2..12)")
    common(p)
    p.set_defaults(func=cmd_verify_bessel)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
