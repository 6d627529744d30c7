"""(5,0) nanotube fullerenes capped by two six-pentagon clusters."""
import logging
from typing import List, Tuple

from apps.core.exceptions import InvalidGraphError
from apps.core.graph import FullereneGraph, validate_fullerene
from apps.spirals.services.spiral import SpiralCode, wind_face_sizes

logger = logging.getLogger(__name__)

CAP_FACES = 6
RING_FACES = 5


def tube_spiral(j: int) -> SpiralCode:
    """Spiral of the tube with ``j`` hexagon rings: a cap, ``5j`` hexagons, a cap."""
    if j < 1:
        raise InvalidGraphError(
            f"A tube needs at least one hexagon ring, got {j}; the caps would fuse into one cluster",
            code='cluster',
        )
    far_cap = CAP_FACES + RING_FACES * j
    positions = tuple(range(1, CAP_FACES + 1)) + tuple(range(far_cap + 1, far_cap + CAP_FACES + 1))
    return SpiralCode(20 + 10 * j, positions)


def tube_rings(j: int) -> Tuple[FullereneGraph, List[List[int]]]:
    """The tube fullerene and the face ids of each hexagon ring, from the first cap outwards."""
    code = tube_spiral(j)
    graph, face_of = wind_face_sizes(code.face_sizes())
    F = validate_fullerene(graph)
    rings = [
        [face_of[CAP_FACES + RING_FACES * r + i] for i in range(RING_FACES)]
        for r in range(j)
    ]
    return F, rings


def tube_fullerene_6_6(j: int) -> FullereneGraph:
    return tube_rings(j)[0]
