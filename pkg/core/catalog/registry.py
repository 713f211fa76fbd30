import importlib
import inspect
import logging
import pkgutil
from typing import Dict, List, Type

import core.catalog
from core.catalog.base import CatalogEntry
from core.errors import UnknownEntryError

logger = logging.getLogger(__name__)


class CatalogRegistry:
    _registry: Dict[str, Type[CatalogEntry]] = {}

    @classmethod
    def register(cls, entry_cls: Type[CatalogEntry]):
        instance = entry_cls()
        cls._registry[instance.name] = entry_cls

    @classmethod
    def _autodiscover_entries(cls) -> None:
        """Import every family module (prefix fam_) and register its concrete entries."""
        for module_info in pkgutil.iter_modules(core.catalog.__path__):
            module_name = module_info.name
            if not module_name.startswith("fam_"):
                continue

            fq_module = f"core.catalog.{module_name}"
            try:
                module = importlib.import_module(fq_module)
            except Exception as exc:
                logger.warning("Catalog autodiscovery failed importing %s: %s", fq_module, exc)
                continue

            for _, obj in inspect.getmembers(module, inspect.isclass):
                if not issubclass(obj, CatalogEntry) or inspect.isabstract(obj):
                    continue
                if obj.__module__ != module.__name__:
                    continue
                try:
                    cls.register(obj)
                except Exception as exc:
                    logger.warning(
                        "Catalog autodiscovery failed registering %s.%s: %s",
                        module.__name__,
                        obj.__name__,
                        exc,
                    )

    @classmethod
    def get_entry(cls, name: str) -> CatalogEntry:
        entry_cls = cls._registry.get(name)
        if not entry_cls:
            cls._autodiscover_entries()
            entry_cls = cls._registry.get(name)
        if not entry_cls:
            raise UnknownEntryError(f"unknown catalog entry '{name}'")
        return entry_cls()

    @classmethod
    def list_entries(cls) -> List[CatalogEntry]:
        cls._autodiscover_entries()
        return [cls._registry[name]() for name in sorted(cls._registry)]
