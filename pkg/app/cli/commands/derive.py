import argparse
import logging

from core.errors import InconsistentEquationError
from core.schemas.codec import egf_equation_from_payload, load_payload, tau_equation_to_payload
from core.schemas.enums import ResidualStatus
from core.schemas.messages import EgfEquationPayload, TauEquationPayload
from core.services.egf_compiler import compile_equation, verify_compiled

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("derive", help="compile an EGF equation into a tau-equation", parents=[common])
    parser.add_argument("--egf", required=True, help="EgfEquation JSON file")
    parser.add_argument("--verify-order", type=int, default=None, help="also check the result to this order")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> TauEquationPayload:
    egf = egf_equation_from_payload(load_payload(args.egf, EgfEquationPayload))
    eq = compile_equation(egf)
    if args.verify_order:
        report = verify_compiled(egf, eq, args.verify_order)
        if report.status is not ResidualStatus.EXACT:
            raise InconsistentEquationError(
                f"compiled equation fails at order {report.first_failing_order}"
            )
        logger.info("compiled equation exact to order %d", args.verify_order)
    return tau_equation_to_payload(eq)
