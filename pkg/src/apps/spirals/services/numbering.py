"""Atlas-style ``n:rank`` isomer numbering."""
import bisect
import logging
from typing import List, Tuple

from django.conf import settings
from django.core.cache import cache

from apps.core.exceptions import EnumerationLimitError
from apps.core.graph import FullereneGraph
from apps.isomers.services.generator import canonical_spirals
from apps.spirals.services.spiral import SpiralCode, canonical_spiral, wind_from_spiral

logger = logging.getLogger(__name__)


def _cache_key(n: int) -> str:
    return f'isomers:spirals:{n}'


def isomer_spirals(n: int) -> List[Tuple[int, ...]]:
    """Sorted canonical pentagon-position lists of all C_n isomers (cached)."""
    if n > settings.SPIRAL_ENUMERATION_N_MAX:
        raise EnumerationLimitError(
            f"n = {n} exceeds SPIRAL_ENUMERATION_N_MAX = {settings.SPIRAL_ENUMERATION_N_MAX}"
        )
    key = _cache_key(n)
    spirals = cache.get(key)
    if spirals is None:
        logger.info(f"Enumerating C{n} isomers for spiral numbering")
        spirals = [code.positions for code in canonical_spirals(n)]
        cache.set(key, spirals, timeout=settings.ISOMER_CACHE_TIMEOUT)
    return [tuple(s) for s in spirals]


def spiral_id(F: FullereneGraph) -> Tuple[int, int]:
    """``(n, rank)`` with rank the 1-based position of F's canonical spiral."""
    code = canonical_spiral(F)
    spirals = isomer_spirals(F.n)
    index = bisect.bisect_left(spirals, code.positions)
    if index == len(spirals) or spirals[index] != code.positions:
        raise EnumerationLimitError(f"Canonical spiral {code} missing from the C{F.n} enumeration")
    return F.n, index + 1


def format_spiral_id(n: int, rank: int) -> str:
    return f'{n}:{rank}'


def isomer_from_id(n: int, rank: int) -> FullereneGraph:
    """Inverse of :func:`spiral_id`."""
    spirals = isomer_spirals(n)
    if not 1 <= rank <= len(spirals):
        raise EnumerationLimitError(f"C{n} has {len(spirals)} isomers; no rank {rank}")
    return wind_from_spiral(SpiralCode(n, spirals[rank - 1]))


def parse_spiral_id(text: str) -> Tuple[int, int]:
    head, _, tail = text.partition(':')
    return int(head), int(tail)
