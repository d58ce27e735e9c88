"""Command line for the oracle generator.

    pcforacle generate --requests req.json --out fixtures.json [--digits 30]
    pcforacle default-set --out fixtures.json [--digits 30]
    pcforacle check-tables

`generate` consumes a JSON array of {function, a, x, precision_digits?}
requests; `default-set` emits the standard differential-test set; both write
the fixture schema {function, a, x, value_30_digits} the consumer's
`selftest --oracle-file` expects.  `check-tables` recomputes the embedded
reference grids and reports, cell by cell, whether the printed digits are the
correctly rounded ones.
"""

from __future__ import annotations

import argparse
import sys

from .generator import PrecisionError, default_requests, generate, load_requests
from .validate import check_tables


def main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="pcforacle",
                                description="Arbitrary-precision oracle fixture generator.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="evaluate a request file")
    g.add_argument("--requests", required=True)
    g.add_argument("--out", required=True)
    g.add_argument("--digits", type=int, default=None,
                   help="override precision_digits for every request")

    d = sub.add_parser("default-set", help="emit the standard fixture set")
    d.add_argument("--out", required=True)
    d.add_argument("--digits", type=int, default=30)

    c = sub.add_parser("check-tables", help="recompute the embedded grids")

    args = p.parse_args(argv)
    try:
        if args.command == "generate":
            reqs = load_requests(args.requests)
            if args.digits is not None:
                from .generator import OracleRequest

                reqs = [OracleRequest(r.function, r.a, r.x, args.digits) for r in reqs]
            entries = generate(reqs, args.out)
            print(f"wrote {len(entries)} fixtures to {args.out}")
            return 0
        if args.command == "default-set":
            entries = generate(default_requests(args.digits), args.out)
            print(f"wrote {len(entries)} fixtures to {args.out}")
            return 0
        report = check_tables()
        for line in report.lines:
            print(line)
        print(f"{report.exact}/{report.total} cells exactly rounded; "
              f"{len(report.mismatches)} mismatches (all documented: {report.all_documented})")
        return 0 if report.all_documented else 1
    except (OSError, ValueError, PrecisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
