"""Command-line client for the fold service.

Every command is a thin HTTP call: against a remote server when --server is
given, otherwise against the FastAPI app mounted in-process, so no daemon is
needed for local use.  ``pagefold serve`` starts the HTTP server itself.

Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
3 internal solver error (or unreachable server).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from typing import Any

import httpx

from .curves import CURVE_KINDS, fmt

_SOLVE_FIELDS = (
    "aspect", "constrained", "case", "a", "b", "excess", "x_e", "y_e",
    "regime", "oracle_excess",
)


def _request(server: str | None, method: str, path: str,
             json_body: dict | None = None,
             params: dict | None = None) -> tuple[int, str]:
    async def go() -> tuple[int, str]:
        if server is None:
            from .service.app import create_app

            transport = httpx.ASGITransport(
                app=create_app(), raise_app_exceptions=False
            )
            base_url = "http://pagefold.internal"
        else:
            transport = None
            base_url = server
        async with httpx.AsyncClient(
            transport=transport, base_url=base_url, timeout=None
        ) as client:
            resp = await client.request(method, path, json=json_body, params=params)
            return resp.status_code, resp.text

    return asyncio.run(go())


def _error_detail(text: str) -> str:
    try:
        return str(json.loads(text).get("detail", text))
    except (json.JSONDecodeError, AttributeError):
        return text


def _http_failure(status: int, text: str) -> int:
    detail = _error_detail(text)
    print(f"error: {detail}", file=sys.stderr)
    return 2 if status in (400, 422) else 3


def _write_output(path: str, content: str) -> int:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(content)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return 2
    print(path)
    return 0


def _show(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fmt(value)
    return str(value)


# =============================================================================
# Commands
# =============================================================================

def _cmd_solve(args: argparse.Namespace) -> int:
    body = {
        "aspect": args.aspect,
        "constrained": args.constrained,
        "with_oracle": args.with_oracle,
        "oracle_n": args.oracle_n,
    }
    status, text = _request(args.server, "POST", "/solve", json_body=body)
    if status != 200:
        return _http_failure(status, text)
    report = json.loads(text)
    if args.json:
        print(json.dumps(report, indent=2))
        return 0
    width = max(len(k) for k in _SOLVE_FIELDS)
    for key in _SOLVE_FIELDS:
        print(f"{key:<{width}}  {_show(report[key])}")
    return 0


def _cmd_curve(args: argparse.Namespace) -> int:
    body: dict[str, Any] = {"kind": args.kind, "samples": args.samples}
    if args.aspects is not None:
        body["aspects"] = _parse_float_list(args.aspects, "--aspects")
    if args.a_values is not None:
        body["a_values"] = _parse_float_list(args.a_values, "--a-values")
    body["constrained"] = args.constrained
    body["from_aspect"] = args.from_aspect
    body["to_aspect"] = args.to_aspect
    status, text = _request(args.server, "POST", "/curve", json_body=body)
    if status != 200:
        return _http_failure(status, text)
    return _write_output(args.out or f"{args.kind}.csv", text)


def _cmd_render(args: argparse.Namespace) -> int:
    body = {"aspect": args.aspect, "case": args.case, "a": args.a, "b": args.b}
    status, text = _request(args.server, "POST", "/render", json_body=body)
    if status != 200:
        return _http_failure(status, text)
    return _write_output(args.out, text)


def _cmd_verify(args: argparse.Namespace) -> int:
    status, text = _request(
        args.server, "POST", "/verify", json_body={"level": args.level}
    )
    if status != 200:
        return _http_failure(status, text)
    report = json.loads(text)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        width = max(len(c["name"]) for c in report["checks"])
        for check in report["checks"]:
            flag = "PASS" if check["passed"] else "FAIL"
            print(f"{check['name']:<{width}}  {flag}  {check['detail']}")
        failed = [c for c in report["checks"] if not c["passed"]]
        if failed:
            print(f"{len(failed)} of {len(report['checks'])} checks failed")
        else:
            print(f"all {len(report['checks'])} checks passed")
    return 0 if report["passed"] else 1


def _cmd_critical(args: argparse.Namespace) -> int:
    status, text = _request(
        args.server, "GET", "/critical", params={"tol": args.tol}
    )
    if status != 200:
        return _http_failure(status, text)
    report = json.loads(text)
    if args.json:
        print(json.dumps(report, indent=2))
        return 0
    print(f"critical aspect ratio A_cr = {report['critical_aspect']:.6f}")
    print(
        f"matches (1+sqrt(2))/2 = {report['closed_form_value']:.6f}: "
        f"{_show(report['matches_closed_form'])}"
    )
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("pagefold.service.app:app", host=args.host, port=args.port)
    return 0


def _parse_float_list(raw: str, flag: str) -> list[float]:
    try:
        values = [float(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise SystemExit(f"error: {flag} expects a comma-separated list of numbers")
    if not values:
        raise SystemExit(f"error: {flag} expects at least one number")
    return values


# =============================================================================
# Parser
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pagefold",
        description="Optimal single folds of a page pinned along its top edge.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running pagefold server (default: run in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute the optimal fold for a page")
    p_solve.add_argument("--aspect", type=float, default=1.0)
    p_solve.add_argument("--constrained", action="store_true",
                         help="forbid the fold from poking above the top edge")
    p_solve.add_argument("--with-oracle", action="store_true",
                         help="cross-check with the brute-force grid oracle")
    p_solve.add_argument("--oracle-n", type=int, default=500)
    p_solve.add_argument("--json", action="store_true")
    p_solve.set_defaults(func=_cmd_solve)

    p_curve = sub.add_parser("curve", help="write one of the curve data files")
    p_curve.add_argument("kind", choices=CURVE_KINDS)
    p_curve.add_argument("--samples", type=int, default=201)
    p_curve.add_argument("--aspects", default=None,
                         help="comma-separated aspect ratios (transition)")
    p_curve.add_argument("--a-values", default=None,
                         help="comma-separated fixed a values (summary)")
    p_curve.add_argument("--constrained", action="store_true")
    p_curve.add_argument("--from", dest="from_aspect", type=float, default=1.0)
    p_curve.add_argument("--to", dest="to_aspect", type=float, default=1.5)
    p_curve.add_argument("--out", default=None, help="output path (default <kind>.csv)")
    p_curve.set_defaults(func=_cmd_curve)

    p_render = sub.add_parser("render", help="render one fold as SVG")
    p_render.add_argument("--aspect", type=float, default=1.0)
    p_render.add_argument("--case", type=int, choices=(1, 2), default=2)
    p_render.add_argument("--a", type=float, required=True)
    p_render.add_argument("--b", type=float, required=True)
    p_render.add_argument("--out", default="fold.svg")
    p_render.set_defaults(func=_cmd_render)

    p_verify = sub.add_parser("verify", help="run the self-verification suite")
    p_verify.add_argument("--level", choices=("fast", "full"), default="fast")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_critical = sub.add_parser("critical",
                                help="print the critical aspect ratio A_cr")
    p_critical.add_argument("--tol", type=float, default=1e-6)
    p_critical.add_argument("--json", action="store_true")
    p_critical.set_defaults(func=_cmd_critical)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        return exc.code if isinstance(exc.code, int) else 2
    except httpx.HTTPError as exc:
        print(f"error: cannot reach server: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
