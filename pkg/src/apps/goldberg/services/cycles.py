"""Hexagon cycles: closed chains of edge-sharing hexagons that separate a fullerene.

Disjoint hexagon cycles between two pentagon clusters bound their distance
from below, and every hexagon cycle of a fullerene gives three disjoint ones
in its (5,0) inflation.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Collection, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from apps.core.exceptions import InvalidGraphError
from apps.core.graph import FullereneGraph, face_distances_from, region_boundary
from apps.clusters.services.clusters import PentagonCluster, cluster_distance
from apps.goldberg.services.inflation import InflationMap

logger = logging.getLogger(__name__)

LIFTED_CYCLES = 3


@dataclass(frozen=True)
class HexagonCycle:
    faces: Tuple[int, ...]
    inside: FrozenSet[int]

    def __len__(self) -> int:
        return len(self.faces)

    def outside(self, F: FullereneGraph) -> FrozenSet[int]:
        return frozenset(range(F.face_count)) - self.inside - set(self.faces)


def _component(F: FullereneGraph, seeds: Iterable[int], blocked: Collection[int]) -> FrozenSet[int]:
    seen = {f for f in seeds if f not in blocked}
    queue = deque(seen)
    while queue:
        f = queue.popleft()
        for g in F.face_neighbors[f]:
            if g not in seen and g not in blocked:
                seen.add(g)
                queue.append(g)
    return frozenset(seen)


def validate_hexagon_cycle(F: FullereneGraph, cycle: HexagonCycle) -> HexagonCycle:
    faces = cycle.faces
    if len(faces) < 3 or len(set(faces)) != len(faces):
        raise InvalidGraphError("A hexagon cycle needs at least three distinct faces", code='cycle')
    for i, f in enumerate(faces):
        if F.is_pentagon(f):
            raise InvalidGraphError(f"Face {f} of the cycle is a pentagon", code='cycle')
        if faces[(i + 1) % len(faces)] not in F.face_neighbors[f]:
            raise InvalidGraphError(f"Cycle faces {f} and {faces[(i + 1) % len(faces)]} do not share an edge", code='cycle')
    members = set(faces)
    inside = cycle.inside
    if not inside or inside & members:
        raise InvalidGraphError("The inside of a hexagon cycle must be non-empty and off the cycle", code='cycle')
    if _component(F, inside, members) != inside:
        raise InvalidGraphError("The cycle inside is not a side of the cycle", code='cycle')
    if not cycle.outside(F):
        raise InvalidGraphError("A hexagon cycle must leave faces outside", code='cycle')
    return cycle


def hexagon_cycle(F: FullereneGraph, faces: Sequence[int], inside_face: int) -> HexagonCycle:
    """Cycle through ``faces`` whose inside is the side containing ``inside_face``."""
    inside = _component(F, [inside_face], set(faces))
    return validate_hexagon_cycle(F, HexagonCycle(tuple(faces), inside))


def boundary_face_chain(F: FullereneGraph, region: Iterable[int]) -> List[int]:
    """Faces just outside ``region``, in order around its boundary.

    Consecutive faces of the chain share an edge; a face touching the
    boundary along several stretches appears once per stretch.
    """
    chain: List[int] = []
    for u, v in region_boundary(F.graph, region):
        face = F.dart_face[(v, u)]
        if not chain or chain[-1] != face:
            chain.append(face)
    while len(chain) > 1 and chain[0] == chain[-1]:
        chain.pop()
    return chain


def _separates(F: FullereneGraph, faces: Collection[int], sources: Collection[int], far: Collection[int]) -> bool:
    reached = _component(F, sources, set(faces))
    return not reached & set(far)


def _simple_chain(F: FullereneGraph, chain: List[int], sources, far) -> Optional[List[int]]:
    while True:
        seen: Dict[int, int] = {}
        repeat = None
        for index, face in enumerate(chain):
            if face in seen:
                repeat = (seen[face], index)
                break
            seen[face] = index
        if repeat is None:
            return chain
        i, j = repeat
        for candidate in (chain[:i] + chain[j:], chain[i:j]):
            if len(candidate) >= 3 and _separates(F, candidate, sources, far):
                chain = candidate
                break
        else:
            return None


def _ring_at_distance(
    F: FullereneGraph, distances: Dict[int, int], d: int, sources: Collection[int], far: Collection[int]
) -> Optional[HexagonCycle]:
    """Hexagon cycle made of faces at distance exactly ``d`` from ``sources``, if there is one."""
    near = {f for f, dist in distances.items() if dist < d}
    beyond = _component(F, far, near)
    if not beyond:
        return None
    region = frozenset(range(F.face_count)) - beyond
    try:
        chain = _simple_chain(F, boundary_face_chain(F, region), sources, far)
    except InvalidGraphError:
        return None
    if chain is None or any(distances.get(f) != d or F.is_pentagon(f) for f in chain):
        return None
    inside = _component(F, sources, set(chain))
    try:
        return validate_hexagon_cycle(F, HexagonCycle(tuple(chain), inside))
    except InvalidGraphError:
        return None


def separating_cycle_witnesses(
    F: FullereneGraph, C1: PentagonCluster, C2: PentagonCluster
) -> List[HexagonCycle]:
    """Disjoint hexagon cycles with ``C1`` inside and ``C2`` outside, one per distance layer."""
    limit = cluster_distance(F, C1, C2)
    distances = face_distances_from(F, C1.faces)
    witnesses = []
    for d in range(1, limit):
        ring = _ring_at_distance(F, distances, d, C1.faces, C2.faces)
        if ring is not None and not ring.inside & C2.faces:
            witnesses.append(ring)
    return witnesses


def lift_hexagon_cycle(
    cycle: HexagonCycle, inflated: FullereneGraph, inflation: InflationMap
) -> List[HexagonCycle]:
    """The three disjoint hexagon cycles an inflation makes out of ``cycle``.

    They are the layers at distance 1, 2 and 3 from the faces descending from
    the cycle's inside, all of which lie in the region descending from the cycle.
    """
    source = inflation.source
    validate_hexagon_cycle(source, cycle)
    sources = inflation.children(cycle.inside)
    far = inflation.children(cycle.outside(source))
    distances = face_distances_from(inflated, sources)
    lifted = []
    for d in range(1, LIFTED_CYCLES + 1):
        ring = _ring_at_distance(inflated, distances, d, sources, far)
        if ring is None:
            raise InvalidGraphError(f"Layer {d} around the lifted cycle is not a hexagon cycle", code='cycle')
        lifted.append(ring)
    return lifted
