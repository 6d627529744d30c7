"""The Goldberg (5,0) inflation.

Each dual triangle (one per vertex) is cut into 25 triangles along the
lattice with five points per side, and the refined triangulation is dualized
back. Lattice points become the faces of the inflated graph: triangle corners
keep the size of the face they stand for, every other point is a hexagon.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, List, Tuple

from apps.core.embedding import plane_graph_from_triangles, triangles_from_fullerene
from apps.core.exceptions import InvalidGraphError
from apps.core.graph import FullereneGraph, validate_fullerene

logger = logging.getLogger(__name__)

SCALE = 5

# lattice points (a, b) of a triangle (A, B, C); the point is A + a(B - A)/5 + b(C - A)/5
_POINTS = [(a, b) for a in range(SCALE + 1) for b in range(SCALE + 1 - a)]
_UP = [((a, b), (a + 1, b), (a, b + 1)) for a, b in _POINTS if a + b <= SCALE - 1]
_DOWN = [((a + 1, b), (a + 1, b + 1), (a, b + 1)) for a, b in _POINTS if a + b <= SCALE - 2]


@dataclass(frozen=True)
class InflationMap:
    """Parent face of every face of an inflated graph.

    Faces whose centre lies on an edge of the source graph sit between two
    parents: ``parent`` holds the lower face id and ``shared`` the other one.
    """

    source: FullereneGraph
    parent: Tuple[int, ...]
    corner: Tuple[int, ...]
    shared: Dict[int, int] = field(default_factory=dict, compare=False)

    def children(self, parents: Iterable[int], closed: bool = False) -> FrozenSet[int]:
        """Faces descending from ``parents``; ``closed`` adds the faces they share."""
        wanted = set(parents)
        faces = {f for f, p in enumerate(self.parent) if p in wanted}
        if closed:
            faces |= {f for f, other in self.shared.items() if other in wanted}
        return frozenset(faces)

    def strict_children(self, parents: Iterable[int]) -> FrozenSet[int]:
        """Faces descending from ``parents`` alone, without any shared face."""
        return frozenset(f for f in self.children(parents) if f not in self.shared)


def _point_key(triangle: Tuple[int, int, int], index: int, a: int, b: int) -> Hashable:
    weights = ((triangle[0], SCALE - a - b), (triangle[1], a), (triangle[2], b))
    nonzero = [(face, w) for face, w in weights if w]
    if len(nonzero) == 1:
        return ('f', nonzero[0][0])
    if len(nonzero) == 2:
        (x, wx), (y, wy) = sorted(nonzero)
        return ('e', x, y, wx)
    return ('t', index, a, b)


def _owners(key: Hashable, weights: List[Tuple[int, int]]) -> Tuple[int, int]:
    """Parent face of a lattice point, and the second parent on a tie (else -1)."""
    if key[0] == 'f':
        return key[1], -1
    best = max(w for _, w in weights)
    tied = sorted(face for face, w in weights if w == best)
    return tied[0], (tied[1] if len(tied) > 1 else -1)


def goldberg_5_0(F: FullereneGraph) -> Tuple[FullereneGraph, InflationMap]:
    triangles = triangles_from_fullerene(F)
    refined = []
    owners: Dict[Hashable, Tuple[int, int]] = {}
    for index, triangle in enumerate(triangles):
        keys = {}
        for a, b in _POINTS:
            key = _point_key(triangle, index, a, b)
            keys[(a, b)] = key
            if key not in owners:
                weights = [(triangle[0], SCALE - a - b), (triangle[1], a), (triangle[2], b)]
                owners[key] = _owners(key, weights)
        for small in _UP + _DOWN:
            refined.append(tuple(keys[p] for p in small))
    graph, face_of = plane_graph_from_triangles(refined)
    inflated = validate_fullerene(graph)
    if inflated.n != 25 * F.n:
        raise InvalidGraphError(
            f"Inflation of C{F.n} has {inflated.n} vertices, expected {25 * F.n}", code='vertex_count'
        )

    parent = [-1] * inflated.face_count
    shared = {}
    for key, face_id in face_of.items():
        first, second = owners[key]
        parent[face_id] = first
        if second >= 0:
            shared[face_id] = second
    corner = tuple(face_of[('f', f)] for f in range(F.face_count))
    for f in F.pentagon_indices:
        if not inflated.is_pentagon(corner[f]):
            raise InvalidGraphError(f"Face {f} lost its pentagon under inflation", code='face_size')
    logger.info(f"Inflated C{F.n} to C{inflated.n}")
    return inflated, InflationMap(F, tuple(parent), corner, shared)
