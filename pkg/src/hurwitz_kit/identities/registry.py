"""The identity registry: every catalog entry, in a fixed order."""
from functools import lru_cache
from typing import Tuple

from ._core import Identity, UnknownIdentityError


@lru_cache(maxsize=1)
def registry() -> Tuple[Identity, ...]:
    """All identities, in catalog order.  Built once; the tuple is immutable."""
    from . import catalog_parts, catalog_series, catalog_special, catalog_transform
    entries = [*catalog_transform.IDENTITIES, *catalog_special.IDENTITIES,
               *catalog_series.IDENTITIES, *catalog_parts.IDENTITIES]
    seen = set()
    for ident in entries:
        if ident.id in seen:
            raise RuntimeError(f"duplicate identity id {ident.id!r}")
        seen.add(ident.id)
    return tuple(entries)


@lru_cache(maxsize=1)
def _index():
    return {i.id: i for i in registry()}


def get(identity_id: str) -> Identity:
    try:
        return _index()[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity {identity_id!r}") from None
