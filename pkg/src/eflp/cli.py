"""Command-line front end.

The CLI is a thin client of the service layer: it builds the same request
models the HTTP API accepts and, by default, calls the handlers in process.
With ``--url`` it posts the request to a running server instead.

Exit codes: 0 success, 1 non-convergence, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from pydantic import BaseModel

from . import service
from .fixpoint import NonConvergenceError
from .theorems import THEOREMS

EXIT_OK = 0
EXIT_NON_CONVERGENCE = 1
EXIT_INPUT = 2


def _dump(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _env_max_iter() -> int | None:
    raw = os.environ.get("EFLP_MAX_ITER")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise service.InputError(f"EFLP_MAX_ITER must be an integer, got {raw!r}")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise service.InputError(str(exc)) from None


def _read_interp(raw: str | None) -> dict | None:
    if raw is None:
        return None
    if not raw.lstrip().startswith("{") and Path(raw).exists():
        raw = Path(raw).read_text()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise service.InputError(f"bad interpretation JSON: {exc}") from None
    if not isinstance(data, dict):
        raise service.InputError("interpretation JSON must be an object")
    return data


def _call(endpoint: str, request: BaseModel, url: str | None) -> dict:
    if url is None:
        handler = {
            "solve": service.solve,
            "translate": service.translate,
            "oracle-compare": service.oracle_compare,
        }[endpoint]
        response = handler(request)
        return response.model_dump(exclude_none=True)
    import httpx

    reply = httpx.post(
        f"{url.rstrip('/')}/{endpoint}", json=request.model_dump(), timeout=600.0
    )
    if reply.status_code != 200:
        body = reply.json()
        if body.get("error_kind") == "non-convergence":
            raise NonConvergenceError(0)
        raise service.InputError(body.get("detail", reply.text))
    data = reply.json()
    return {k: v for k, v in data.items() if v is not None}


def _interp_lines(interp: dict) -> list[str]:
    return [f"  {atom}: ({t}, {f})" for atom, (t, f) in sorted(interp.items())]


def _solve_text(data: dict) -> str:
    lines = [f"{data['semantics']} over {data['lattice']} lattice"]
    if "iterations" in data:
        lines.append(f"iterations: {data['iterations']}")
    if "lower" in data:
        if data.get("exact"):
            lines.append(f"exact (consistent: {data['consistent']})")
            lines.append("interpretation:")
            lines.extend(_interp_lines(data["lower"]))
        else:
            lines.append("lower bound:")
            lines.extend(_interp_lines(data["lower"]))
            lines.append("upper bound:")
            lines.extend(_interp_lines(data["upper"]))
    if "models" in data:
        lines.append(
            f"{data['count']} stable model(s) on grid "
            f"{{{', '.join(data['grid'])}}}"
            + ("" if data.get("grid_complete") else " (grid not complete)")
        )
        for i, m in enumerate(data["models"], start=1):
            lines.append(f"model {i}:")
            lines.extend(_interp_lines(m))
    if "is_model" in data:
        lines.append(f"model: {data['is_model']}")
        lines.append(f"stable model: {data['is_stable']}")
        lines.append(f"consistent: {data['consistent']}")
    return "\n".join(lines) + "\n"


def cmd_solve(args: argparse.Namespace) -> int:
    request = service.SolveRequest(
        text=_read_text(args.file),
        dialect=args.dialect,
        semantics=args.semantics,
        interpretation=_read_interp(args.interp),
        max_iter=args.max_iter or _env_max_iter(),
        grid=args.grid.split(",") if args.grid else None,
    )
    data = _call("solve", request, args.url)
    sys.stdout.write(_dump(data) if args.json else _solve_text(data))
    return EXIT_OK


def cmd_translate(args: argparse.Namespace) -> int:
    request = service.TranslateRequest(
        text=_read_text(args.file), dialect=args.dialect
    )
    data = _call("translate", request, args.url)
    sys.stdout.write(data["core_text"])
    return EXIT_OK


def cmd_oracle_compare(args: argparse.Namespace) -> int:
    request = service.OracleCompareRequest(
        theorem=args.theorem,
        text=_read_text(args.file) if args.file else None,
        random_count=args.random,
        seed=args.seed,
    )
    data = _call("oracle-compare", request, args.url)
    if "first_divergence" not in data:
        data["first_divergence"] = None
    sys.stdout.write(_dump(data))
    return EXIT_OK if data["divergences"] == 0 else EXIT_INPUT


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("eflp.api:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eflp",
        description="Fixpoint semantics for extended fuzzy logic programs.",
    )
    parser.add_argument(
        "--url", help="send requests to a running eflp server instead of solving in process"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute a semantics for a program file")
    solve.add_argument("file", help="program file, or '-' for stdin")
    solve.add_argument(
        "--semantics", choices=["kk", "wf", "stable", "model-check"], default="wf"
    )
    solve.add_argument("--dialect", choices=["core", "saad", "cornejo"], default="core")
    solve.add_argument("--interp", help="interpretation JSON (inline or a file path)")
    solve.add_argument("--max-iter", type=int, default=None)
    solve.add_argument("--grid", help="comma-separated truth values, e.g. 0,1/2,1")
    solve.add_argument("--json", action="store_true", help="machine-readable output")
    solve.add_argument("--seed", type=int, default=7, help=argparse.SUPPRESS)
    solve.set_defaults(fn=cmd_solve)

    tr = sub.add_parser("translate", help="translate a dialect file to core text")
    tr.add_argument("file")
    tr.add_argument("--from", dest="dialect", choices=["saad", "cornejo"], required=True)
    tr.set_defaults(fn=cmd_translate)

    oc = sub.add_parser(
        "oracle-compare",
        help="check a correspondence theorem against the oracle semantics",
    )
    oc.add_argument("file", nargs="?", help="program file (omit to use --random)")
    oc.add_argument("--theorem", choices=list(THEOREMS), required=True)
    oc.add_argument("--random", type=int, help="size of the random corpus")
    oc.add_argument("--seed", type=int, default=7)
    oc.set_defaults(fn=cmd_oracle_compare)

    sv = sub.add_parser("serve", help="run the HTTP API")
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--port", type=int, default=8000)
    sv.set_defaults(fn=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_CONVERGENCE
    except service.InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
