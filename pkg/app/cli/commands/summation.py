import argparse

from core.arith.gauss import GaussRat
from core.config import settings
from core.schemas.codec import (
    load_payload,
    ratfun_from_payload,
    solution_space_to_payload,
    telescoper_to_payload,
    witness_to_payload,
)
from core.schemas.messages import RationalResultPayload, RatFunPayload, TelescoperPayload
from core.services.summability import is_summable, rational_solutions, telescoper_decide
from core.tau.calculus import MoebiusShift


def _shift(args: argparse.Namespace) -> MoebiusShift:
    return MoebiusShift(GaussRat.parse(args.beta))


def _ratfun(path: str):
    return ratfun_from_payload(load_payload(path, RatFunPayload))


def register(subparsers, common: argparse.ArgumentParser) -> None:
    summable = subparsers.add_parser("summable", help="solve tau(g) - g = h in rational functions", parents=[common])
    summable.add_argument("--h", required=True, help="RatFun JSON file")
    summable.add_argument("--beta", default="1")
    summable.set_defaults(handler=run_summable)

    telescope = subparsers.add_parser("telescope", help="search for a telescoper of f", parents=[common])
    telescope.add_argument("--f", required=True, help="RatFun JSON file")
    telescope.add_argument("--nmax", type=int, default=settings.TELESCOPER_NMAX)
    telescope.add_argument("--beta", default="1")
    telescope.set_defaults(handler=run_telescope)

    ratsolve = subparsers.add_parser("ratsolve", help="rational solutions of tau(y) = a y + f", parents=[common])
    ratsolve.add_argument("--a", required=True, help="RatFun JSON file")
    ratsolve.add_argument("--f", required=True, help="RatFun JSON file")
    ratsolve.add_argument("--beta", default="1")
    ratsolve.set_defaults(handler=run_ratsolve)


def run_summable(args: argparse.Namespace) -> RationalResultPayload:
    return witness_to_payload(is_summable(_ratfun(args.h), _shift(args)))


def run_telescope(args: argparse.Namespace) -> TelescoperPayload:
    return telescoper_to_payload(telescoper_decide(_ratfun(args.f), _shift(args), args.nmax), args.nmax)


def run_ratsolve(args: argparse.Namespace) -> RationalResultPayload:
    return solution_space_to_payload(rational_solutions(_ratfun(args.a), _ratfun(args.f), _shift(args)))
