"""Command-line front end.

Subcommands: eval (one point), table (cartesian grid), selftest (replay the
embedded reference checks), serve (run the HTTP service).  The CLI is a thin
client over the same request/response models the service exposes: by default
it calls the handlers in process; with --server URL it sends the identical
payloads to a running service instead.

Exit codes: 0 success, 1 reference-check failure, 2 usage error,
3 domain/range/regime/convergence error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .errors import ParacylError
from .service import (
    EvalRequest,
    SelftestRequest,
    TableRequest,
    eval_point,
    eval_table,
    run_selftest,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_EVAL_ERROR = 3

_PLAIN_DIGITS = 15  # human-readable output, matches the embedded tables
_JSON_DIGITS = 17   # round-trips doubles exactly


def _fmt(v: float, digits: int = _PLAIN_DIGITS) -> str:
    return f"{v:.{digits}g}"


def _parse_x_range(text: str):
    """A single real, or the inclusive range start:step:stop."""
    if ":" not in text:
        return [float(text)]
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected start:step:stop, got {text!r}")
    start, step, stop = (float(p) for p in parts)
    if step == 0.0 or not all(map(math.isfinite, (start, step, stop))):
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(max(n, 0))]


class _Remote:
    """HTTP twin of the in-process handlers; needs a running `serve`."""

    def __init__(self, base_url: str):
        import httpx

        self._client = httpx.Client(base_url=base_url, timeout=60.0)

    def _post(self, path: str, payload):
        resp = self._client.post(path, json=payload.model_dump())
        if resp.status_code == 400:
            raise ParacylError(resp.json()["detail"]["message"])
        resp.raise_for_status()
        return resp.json()

    def eval_point(self, req: EvalRequest):
        from .service import EvalResponse

        return EvalResponse(**self._post("/eval", req))

    def eval_table(self, req: TableRequest):
        from .service import TableResponse

        return TableResponse(**self._post("/table", req))

    def run_selftest(self, req: SelftestRequest):
        from .service import SelftestResponse

        return SelftestResponse(**self._post("/selftest", req))


class _Local:
    eval_point = staticmethod(eval_point)
    eval_table = staticmethod(eval_table)
    run_selftest = staticmethod(run_selftest)


def _backend(args):
    return _Remote(args.server) if args.server else _Local()


def _cmd_eval(args) -> int:
    req = EvalRequest(func=args.func, a=args.a, x=args.x, regime=args.regime)
    r = _backend(args).eval_point(req)
    if args.json:
        # raw doubles: repr round-trips exactly (17 significant digits suffice)
        print(json.dumps({
            "func": r.func, "a": r.a, "x": r.x,
            "value": r.value,
            "derivative": r.derivative,
            "accuracy_estimate": r.accuracy_estimate,
            "regime": r.regime,
        }))
    elif args.deriv:
        print(_fmt(r.derivative))
    else:
        print(f"{r.func}({_fmt(r.a)}, {_fmt(r.x)}) = {_fmt(r.value)}")
        print(f"derivative        = {_fmt(r.derivative)}")
        print(f"accuracy estimate = {_fmt(r.accuracy_estimate, 3)}")
        print(f"regime            = {r.regime}")
    return EXIT_OK


def _print_rows(rows, args) -> None:
    if args.json:
        out = [
            {"a": r.a, "x": r.x, "value": r.value, "derivative": r.derivative, "regime": r.regime}
            for r in rows
        ]
        print(json.dumps(out))
        return
    # CSV is the default grid format
    cols = "func,a,x,value,derivative,accuracy_estimate,regime"
    print(cols)
    for r in rows:
        print(
            f"{r.func},{_fmt(r.a)},{_fmt(r.x)},{_fmt(r.value, _JSON_DIGITS)},"
            f"{_fmt(r.derivative, _JSON_DIGITS)},{_fmt(r.accuracy_estimate, 3)},{r.regime}"
        )


def _cmd_table(args) -> int:
    from .reference_tables import REFERENCE_TABLES

    if args.paper_tables:
        if args.table is None:
            raise UsageError("--paper-tables requires --table 4..9")
        func, rows = REFERENCE_TABLES[args.table]
        req = TableRequest(
            func=func,
            a=sorted({a for a, _, _ in rows}),
            x=sorted({x for _, x, _ in rows}),
            regime=args.regime,
        )
    else:
        if args.func is None or args.a is None or args.x is None:
            raise UsageError("table needs --func, --a and --x (or --paper-tables)")
        req = TableRequest(
            func=args.func, a=_parse_x_range(args.a), x=_parse_x_range(args.x),
            regime=args.regime,
        )
    resp = _backend(args).eval_table(req)
    _print_rows(resp.rows, args)
    return EXIT_OK


def _cmd_selftest(args) -> int:
    try:
        resp = _backend(args).run_selftest(SelftestRequest(oracle_file=args.oracle_file))
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot read oracle file: {e}") from e
    if args.json:
        print(resp.model_dump_json())
    else:
        for c in resp.checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: max rel error {c.max_rel_error:.2e}")
        for note in resp.errata_notes:
            print(f"note: {note}")
        print(
            f"{'OK' if resp.ok else 'FAILED'}: {resp.fixture_count} reference fixtures, "
            f"{len(resp.checks)} check groups, {resp.elapsed_seconds:.2f}s"
        )
    return EXIT_OK if resp.ok else EXIT_CHECK_FAILED


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="paracyl",
        description="Weber parabolic cylinder functions U(a,x), V(a,x), W(a,x) and derivatives.",
    )
    p.add_argument("--server", metavar="URL", default=None,
                   help="route the command through a running paracyl service")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, needs_func=True):
        if needs_func:
            sp.add_argument("--func", choices=("U", "V", "W"), required=False)
        sp.add_argument("--regime", choices=("auto", "series", "asymptotic", "closed_form"),
                        default="auto")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    ev = sub.add_parser("eval", help="evaluate one point")
    add_common(ev)
    ev.add_argument("--a", type=float, required=True)
    ev.add_argument("--x", type=float, required=True)
    ev.add_argument("--deriv", action="store_true", help="print only the derivative")
    ev.set_defaults(fn=_cmd_eval)

    tb = sub.add_parser("table", help="evaluate a cartesian (a, x) grid")
    add_common(tb)
    tb.add_argument("--a", type=str, help="value or start:step:stop")
    tb.add_argument("--x", type=str, help="value or start:step:stop")
    tb.add_argument("--csv", action="store_true", help="CSV output (default for grids)")
    tb.add_argument("--paper-tables", action="store_true",
                    help="evaluate one of the embedded reference grids")
    tb.add_argument("--table", type=int, choices=range(4, 10),
                    help="which embedded grid (4..9)")
    tb.set_defaults(fn=_cmd_table)

    st = sub.add_parser("selftest", help="replay embedded reference checks")
    st.add_argument("--oracle-file", type=str, default=None,
                    help="JSON file of 30-digit oracle fixtures to check against")
    st.add_argument("--json", action="store_true")
    st.set_defaults(fn=_cmd_selftest)

    sv = sub.add_parser("serve", help="run the HTTP service")
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--port", type=int, default=8750)
    sv.set_defaults(fn=_cmd_serve)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ParacylError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_EVAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
