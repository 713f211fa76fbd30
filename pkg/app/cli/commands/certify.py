import argparse
import logging

from app.cli.commands.catalog import add_entry_params, entry_params
from core.arith.gauss import ONE
from core.catalog.registry import CatalogRegistry
from core.config import settings
from core.errors import TaucertError
from core.schemas.codec import certificate_to_payload, load_payload, series_from_payload, tau_equation_from_payload
from core.schemas.enums import ErrorCode
from core.schemas.messages import CertificatePayload, SeriesPayload, TauEquationPayload
from core.services.certifier import certify_equation, unsupported_shift

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "certify", help="decide rational vs strongly differentially transcendental", parents=[common]
    )
    parser.add_argument("--equation", default=None, help="TauEquation JSON file")
    parser.add_argument("--series", default=None, help="Series JSON file with the solution prefix")
    parser.add_argument("--entry", default=None, help="catalog entry instead of equation/series files")
    add_entry_params(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> CertificatePayload:
    order = args.order or settings.DEFAULT_ORDER
    if args.entry:
        if args.equation or args.series:
            raise TaucertError("--entry excludes --equation and --series", code=ErrorCode.INVALID_INPUT)
        entry = CatalogRegistry.get_entry(args.entry)
        params = entry_params(args)
        eq, alpha = entry.equation(params), ONE
        w = entry.build_ogf(params, order)
    else:
        if not (args.equation and args.series):
            raise TaucertError("certify needs --equation and --series, or --entry", code=ErrorCode.INVALID_INPUT)
        eq, alpha = tau_equation_from_payload(load_payload(args.equation, TauEquationPayload))
        w = series_from_payload(load_payload(args.series, SeriesPayload))
        if w.is_symbolic():
            raise TaucertError("the series must have x specialized", code=ErrorCode.INVALID_INPUT)

    if alpha != ONE:
        cert = unsupported_shift(eq, w, alpha, min(order, w.order))
    else:
        cert = certify_equation(eq, w, order)
    logger.info("certificate: %s (%s)", cert.verdict.value, cert.evidence.kind.value)
    return certificate_to_payload(cert, alpha)
