"""
taucert command line.

  commands/catalog.py   – list, terms, verify, loci
  commands/derive.py    – EGF equation -> tau-equation
  commands/certify.py   – differential-transcendence certificates
  commands/summation.py – summable, telescope, ratsolve
  commands/numeric.py   – trigamma checks (floating point)
  commands/accept.py    – acceptance suite

Results go to stdout (or --out) as JSON; logs go to stderr. Exit status is 0
on success, 1 on a domain error or a failed check, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from pydantic import BaseModel

from app.cli.commands import accept, catalog, certify, derive, numeric, summation
from core.config import settings
from core.errors import TaucertError
from core.schemas.enums import ErrorCode
from core.schemas.messages import ErrorBody, ErrorPayload

logger = logging.getLogger(__name__)

COMMANDS = (catalog, derive, certify, summation, numeric, accept)
GLOBAL_DEFAULTS: dict[str, Any] = {"order": None, "out": None, "pretty": False, "log_level": None}


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--order", type=int, help=f"truncation order (default {settings.DEFAULT_ORDER})")
    common.add_argument("--out", type=Path, help="write the JSON result to this file")
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    common.add_argument("--log-level", help=f"logging level (default {settings.LOG_LEVEL})")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="taucert", description="Exact tau-equation toolkit", parents=[common])
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS:
        module.register(subparsers, common)
    return parser


def parse_arguments(argv: Sequence[str]) -> argparse.Namespace:
    """Global flags count before or after the subcommand; the last occurrence wins."""
    args = build_parser().parse_args(argv)
    given, _ = _common_parser().parse_known_args(argv)
    for key, default in GLOBAL_DEFAULTS.items():
        setattr(args, key, getattr(given, key, default))
    return args


def _jsonable(result: Any) -> Any:
    if isinstance(result, BaseModel):
        return result.model_dump(mode="json", by_alias=True)
    if isinstance(result, (list, tuple)):
        return [_jsonable(item) for item in result]
    return result


def render(result: Any, pretty: bool) -> str:
    if isinstance(result, BaseModel):
        return result.model_dump_json(indent=2 if pretty else None, by_alias=True)
    return json.dumps(_jsonable(result), indent=2 if pretty else None, separators=None if pretty else (",", ":"))


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
        return
    out.write_text(text + "\n", encoding="utf-8")
    logger.info("wrote %s", out)


def _exit_status(result: Any) -> int:
    return 0 if getattr(result, "passed", True) else 1


def dispatch(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parse_arguments(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=(args.log_level or settings.LOG_LEVEL).upper(),
        format=settings.LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )

    try:
        result = args.handler(args)
    except TaucertError as exc:
        code = exc.code or ErrorCode.INVALID_INPUT
        logger.info("%s failed: %s", args.command, exc.message)
        payload = ErrorPayload(error=ErrorBody(code=code, message=exc.message))
        _emit(render(payload, args.pretty), None)
        return 1

    _emit(render(result, args.pretty), args.out)
    return _exit_status(result)


def main() -> int:
    return dispatch(sys.argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
