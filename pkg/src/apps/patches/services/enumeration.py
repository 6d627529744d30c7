"""Exhaustive enumeration of small patches up to isomorphism."""
import logging
from typing import Dict, List, Tuple

from apps.core.exceptions import PatchError
from apps.patches.services.patch import Patch, PatchBuilder

logger = logging.getLogger(__name__)

# a longer run of degree-3 boundary vertices needs an outside face of 7 or more sides
MAX_CLOSABLE_RUN = 4


def is_closable(patch: Patch) -> bool:
    """Whether pentagons and hexagons can still be put around ``patch``."""
    return all(run.length <= MAX_CLOSABLE_RUN for run in patch.runs(canonical=False))


def extensions(patch: Patch, size: int) -> List[Patch]:
    """Every patch obtained by attaching one ``size``-gon to ``patch``."""
    result = []
    for run in patch.runs(canonical=False):
        length = run.length + 1
        if length > size - 1:
            continue
        builder = patch.to_builder()
        try:
            builder.attach_face(run.start, length, size)
            result.append(builder.freeze())
        except PatchError:
            continue
    return result


def enumerate_patches(p: int, h: int, closable_only: bool = True) -> List[Patch]:
    """All patches with ``p`` pentagons and ``h`` hexagons, one per isomorphism class.

    With ``closable_only`` patches that no fullerene can contain are dropped
    as soon as they appear; attaching faces never shortens a run that is
    too long to cover.
    """
    if p < 0 or h < 0 or p + h == 0:
        raise PatchError(f"No patch with p = {p}, h = {h}", code='structure')
    level: Dict[Tuple[int, int], Dict[Tuple[int, ...], Patch]] = {}
    for size, counts in ((5, (1, 0)), (6, (0, 1))):
        if counts[0] <= p and counts[1] <= h:
            patch = PatchBuilder.single_face(size).freeze()
            level[counts] = {patch.code(): patch}
    for _ in range(p + h - 1):
        following: Dict[Tuple[int, int], Dict[Tuple[int, ...], Patch]] = {}
        for (pi, hi), patches in level.items():
            for size, (dp, dh) in ((5, (1, 0)), (6, (0, 1))):
                counts = (pi + dp, hi + dh)
                if counts[0] > p or counts[1] > h:
                    continue
                bucket = following.setdefault(counts, {})
                for patch in patches.values():
                    for child in extensions(patch, size):
                        if closable_only and not is_closable(child):
                            continue
                        bucket.setdefault(child.code(), child)
        level = following
        logger.debug(f"Patch level sizes: { {k: len(v) for k, v in level.items()} }")
    return list(level.get((p, h), {}).values())


def min_boundary_by_enumeration(p: int, h: int) -> int:
    return min(patch.b for patch in enumerate_patches(p, h))
