"""Merging patches without losing boundary length.

Two patches are glued along boundary edges whose endpoints both have degree
2, which shortens the total boundary by 2. Hexagons are then added at a
shortest maximal run of degree-3 boundary vertices until the boundary length
is back to the sum of the inputs. The result has the same pentagons and more
hexagons than the inputs together.
"""
import logging
from typing import List, Sequence, Tuple

from django.conf import settings

from apps.core.exceptions import PatchError
from apps.patches.services.bounds import min_boundary_length
from apps.patches.services.patch import Patch, PatchBuilder, least_rotation, validate_patch

logger = logging.getLogger(__name__)


def two_two_edge(patch: Patch) -> Tuple[int, int]:
    """First outer dart, in canonical boundary order, with both ends of degree 2."""
    word = patch.degree_word
    b = len(word)
    origin = least_rotation(word)
    for k in range(b):
        i = (origin + k) % b
        if word[i] == '2' and word[(i + 1) % b] == '2':
            return patch.outer[i], patch.outer[(i + 1) % b]
    raise PatchError(f"{patch!r} has no boundary edge with two degree-2 ends", code='no_22_edge')


def _rotate_to(seq: Sequence[int], first: int) -> List[int]:
    i = seq.index(first)
    return list(seq[i:]) + list(seq[:i])


def glue(P: Patch, Q: Patch) -> PatchBuilder:
    """Identify a 2-2 edge of ``P`` with a 2-2 edge of ``Q``.

    With ``(x1, x2)`` and ``(y1, y2)`` the chosen outer darts, ``x1`` is
    identified with ``y2`` and ``x2`` with ``y1``.
    """
    x1, x2 = two_two_edge(P)
    y1, y2 = two_two_edge(Q)
    offset = P.graph.vertex_count
    q_map = {v: v + offset for v in range(Q.graph.vertex_count)}
    q_map[y1] = x2
    q_map[y2] = x1

    rotation: List[List[int]] = [list(r) for r in P.graph.rotation]
    rotation.extend([] for _ in range(Q.graph.vertex_count))
    for v, neighbours in enumerate(Q.graph.rotation):
        if v in (y1, y2):
            continue
        rotation[q_map[v]] = [q_map[u] for u in neighbours]

    p_ring = _rotate_to(P.outer, x2)       # x2, pn, ..., pp, x1
    q_ring = _rotate_to(Q.outer, y2)       # y2, qn, ..., qp, y1
    pn, pp = p_ring[1], p_ring[-2]
    qn, qp = q_map[q_ring[1]], q_map[q_ring[-2]]
    rotation[x1] = [pp, qn, x2]
    rotation[x2] = [qp, pn, x1]

    # drop the vertex slots of y1 and y2 by renumbering the tail
    used = sorted({x for x in range(len(rotation)) if rotation[x]})
    renumber = {v: i for i, v in enumerate(used)}
    rotation = [[renumber[u] for u in rotation[v]] for v in used]
    boundary = [x1] + [q_map[v] for v in q_ring[1:-1]] + [x2] + p_ring[1:-1]
    return PatchBuilder(rotation, [renumber[v] for v in boundary])


def grow_to_boundary(builder: PatchBuilder, target: int, max_hexagons: int) -> int:
    """Add hexagons at a first shortest run until the boundary length is ``target``."""
    added = 0
    while len(builder.boundary) != target:
        if added >= max_hexagons:
            raise PatchError(
                f"Boundary did not reach {target} within {max_hexagons} hexagons", code='growth'
            )
        patch = builder.freeze(validate=False)
        runs = [run for run in patch.runs() if run.length >= 1]
        run = min(runs, key=lambda r: r.length)
        if run.length > 3:
            raise PatchError(f"Shortest run has length {run.length}", code='growth')
        before = len(builder.boundary)
        builder.attach_face(run.start, run.length + 1, 6)
        if len(builder.boundary) - before != 4 - 2 * run.length:
            raise PatchError("Hexagon changed the boundary by an unexpected amount", code='growth')
        added += 1
    return added


def merge_patches(patches: Sequence[Patch], max_hexagons: int = None) -> Patch:
    if len(patches) < 2:
        raise PatchError("Merging needs at least two patches", code='structure')
    total_p = sum(P.p for P in patches)
    if total_p >= 6:
        raise PatchError(f"Merged patch would hold {total_p} pentagons", code='pentagon_budget')
    cap = max_hexagons if max_hexagons is not None else settings.PATCH_MERGE_MAX_HEXAGONS
    merged = patches[0]
    target = merged.b
    for nxt in patches[1:]:
        target += nxt.b
        builder = glue(merged, nxt)
        added = grow_to_boundary(builder, target, cap)
        merged = validate_patch(builder.freeze())
        logger.debug(f"Glued patch of boundary {nxt.b}, added {added} hexagons")
    if merged.b < min_boundary_length(merged.p, merged.h):
        raise PatchError(f"{merged!r} is below the minimum boundary length", code='growth')
    return merged
