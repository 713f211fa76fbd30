import argparse
import sys

from core.schemas.messages import AcceptanceReport
from core.services.acceptance import run_acceptance_suite


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("accept", help="run the acceptance suite", parents=[common])
    parser.add_argument("--filter", default=None, help="only checks whose group or name contains this text")
    parser.add_argument("--workers", type=int, default=None)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> AcceptanceReport:
    outcome = run_acceptance_suite(args.filter, args.workers)
    results = {c.name: c for c in outcome.report.checks}
    width = max((len(name) for name, _ in outcome.timings), default=10)
    for name, elapsed in outcome.timings:
        status = "pass" if results[name].passed else "FAIL"
        sys.stderr.write(f"{name:<{width}}  {status}  {elapsed:8.2f}s\n")
    return outcome.report
