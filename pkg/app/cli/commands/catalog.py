import argparse
import logging
from typing import Any

from core.catalog.registry import CatalogRegistry
from core.config import settings
from core.schemas.codec import residual_to_payload, terms_to_wire
from core.schemas.messages import CatalogEntryPayload, LociPayload, ResidualReportPayload

logger = logging.getLogger(__name__)


def add_entry_params(parser: argparse.ArgumentParser) -> None:
    # negative values need the --x=-1/2 spelling
    parser.add_argument("--x", default=None, help="value of x (p/q, a+bi) or 'symbolic'")
    parser.add_argument("--gamma", default=None, help="value of gamma for gamma-entries")


def entry_params(args: argparse.Namespace) -> dict[str, Any]:
    return {k: v for k, v in (("x", args.x), ("gamma", args.gamma)) if v is not None}


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("catalog", help="generating-function catalog", parents=[common])
    actions = parser.add_subparsers(dest="action", required=True)

    actions.add_parser("list", help="list entries", parents=[common]).set_defaults(handler=list_entries)

    terms = actions.add_parser("terms", help="OGF coefficients", parents=[common])
    terms.add_argument("name")
    terms.add_argument("--n", type=int, default=20, help="number of coefficients")
    add_entry_params(terms)
    terms.set_defaults(handler=entry_terms)

    verify = actions.add_parser("verify", help="substitute the OGF into the stored equation", parents=[common])
    verify.add_argument("name")
    add_entry_params(verify)
    verify.set_defaults(handler=verify_entry)

    loci = actions.add_parser("loci", help="singular and degenerate parameter values", parents=[common])
    loci.add_argument("name")
    loci.add_argument("--gamma", default=None)
    loci.set_defaults(handler=entry_loci)


def list_entries(args: argparse.Namespace) -> list[CatalogEntryPayload]:
    return [CatalogEntryPayload(**entry.metadata()) for entry in CatalogRegistry.list_entries()]


def entry_terms(args: argparse.Namespace) -> list[str]:
    entry = CatalogRegistry.get_entry(args.name)
    return terms_to_wire(entry.build_ogf(entry_params(args), args.n))


def verify_entry(args: argparse.Namespace) -> ResidualReportPayload:
    entry = CatalogRegistry.get_entry(args.name)
    order = args.order or settings.DEFAULT_ORDER
    return residual_to_payload(entry.verify(entry_params(args), order))


def entry_loci(args: argparse.Namespace) -> LociPayload:
    entry = CatalogRegistry.get_entry(args.name)
    report = entry.singular_loci(args.gamma)
    return LociPayload(
        name=entry.name,
        singular_x=[str(z) for z in report.singular],
        degenerate_x=[str(z) for z in report.degenerate],
        singular_gamma=[str(z) for z in report.gamma_singular],
    )
