"""Command-line front end for the gallery and the law checkers.

Exit codes: 0 success, 1 bad input for the example, 2 fuel exhausted,
3 usage error.  Errors are one line on stderr, prefixed ``error:``.
"""
from __future__ import annotations

import argparse
import sys

from .core import DEFAULT_FUEL, FuelExhausted
from .gallery import REGISTRY
from .gallery.dynamic import CountLimitReached
from .indexed import IndexWitnessError
from .laws import run_suite

EXIT_OK, EXIT_DOMAIN, EXIT_FUEL, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(tok: str) -> int:
    n = int(tok)
    if n < 1:
        raise ValueError(tok)
    return n


def _non_negative(tok: str) -> int:
    n = int(tok)
    if n < 0:
        raise ValueError(tok)
    return n


_positive.__name__ = "positive integer"
_non_negative.__name__ = "non-negative integer"


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--fuel", type=_positive, default=DEFAULT_FUEL,
                        help="expansion budget for refolds (default %(default)s)")
    common.add_argument("--seed", type=int, default=42, help="random seed (default %(default)s)")
    common.add_argument("--depth", type=_non_negative, default=20,
                        help="elements shown of codata output (default %(default)s)")

    parser = _Parser(prog="recschemes", description="Recursion-scheme examples and law checks.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    for entry in REGISTRY.values():
        if not entry.cli:
            continue
        p = sub.add_parser(entry.name, parents=[common], help=f"{entry.summary} [{entry.scheme}]")
        for flag, kwargs in entry.arguments:
            p.add_argument(flag, **kwargs)
        p.set_defaults(entry=entry)
    p = sub.add_parser("laws", parents=[common], help="run the law checker suite")
    p.set_defaults(entry=None)
    return parser


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except UsageError as e:
        return _fail(str(e), EXIT_USAGE)
    except SystemExit as e:   # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    try:
        if ns.entry is None:
            reports = run_suite(ns.seed)
            for r in reports:
                print(r.line())
            return EXIT_OK if all(r.passed for r in reports) else EXIT_DOMAIN
        print(ns.entry.run(ns))
    except FuelExhausted as e:
        return _fail(str(e), EXIT_FUEL)
    except KeyError as e:
        return _fail(str(e.args[0]) if e.args else "missing key", EXIT_DOMAIN)
    except (ValueError, LookupError, IndexWitnessError, CountLimitReached) as e:
        return _fail(str(e), EXIT_DOMAIN)
    return EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
