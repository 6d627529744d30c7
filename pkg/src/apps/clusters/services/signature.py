"""Cluster shape signatures and nanotube parameters of six-pentagon clusters."""
import logging
from dataclasses import dataclass
from typing import Tuple, Union

from apps.core.embedding import canonical_code
from apps.core.exceptions import PatchError
from apps.core.graph import FullereneGraph
from apps.clusters.services.clusters import PentagonCluster, closed_cluster_faces
from apps.patches.services.patch import Patch, boundary_code, face_region_graph

logger = logging.getLogger(__name__)

# tube parameters of the six-pentagon clusters, with multiplicities
T6 = (
    (5, 0), (3, 3), (4, 2), (5, 1), (6, 0), (4, 3),
    (5, 2), (6, 1), (7, 0), (4, 4), (5, 3), (6, 2),
)
T6_MULTIPLICITY = {
    (5, 0): 1, (3, 3): 1, (4, 2): 1, (5, 1): 1, (6, 0): 4, (4, 3): 2,
    (5, 2): 2, (6, 1): 2, (7, 0): 1, (4, 4): 1, (5, 3): 1, (6, 2): 1,
}


@dataclass(frozen=True, order=True)
class TubeParams:
    l: int
    m: int

    def __post_init__(self):
        if not self.l >= self.m >= 0:
            raise PatchError(f"Tube parameters need l >= m >= 0, got ({self.l}, {self.m})", code='structure')

    @property
    def in_t6(self) -> bool:
        return (self.l, self.m) in T6_MULTIPLICITY

    def __str__(self) -> str:
        return f'({self.l}, {self.m})'


@dataclass(frozen=True)
class ClusterSignature:
    pentagons: int
    boundary: str
    code: Tuple[int, ...]


def signature_of_patch(patch: Patch) -> ClusterSignature:
    return ClusterSignature(patch.p, boundary_code(patch), patch.code())


def cluster_signature(F: FullereneGraph, C: PentagonCluster) -> ClusterSignature:
    """Signature of the closed cluster: its faces plus enclosed hexagon regions."""
    faces = closed_cluster_faces(F, C)
    try:
        return signature_of_patch(Patch.from_faces(F, faces))
    except PatchError:
        # not a disk, e.g. a cluster of all 12 pentagons with hexagon holes
        graph, _ = face_region_graph(F, faces)
        return ClusterSignature(C.size, '', canonical_code(graph))


# edge directions in multiples of 60 degrees, in the basis (1, w) with w = e^(i pi/3)
_DIRECTIONS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def _normalize(l: int, m: int) -> TubeParams:
    candidates = []
    for _ in range(6):
        for a, b in ((l, m), (m, l)):
            if a >= b >= 0:
                candidates.append((a, b))
        l, m = -m, l + m
    if not candidates:
        raise PatchError(f"Cannot normalize tube vector ({l}, {m})", code='structure')
    return TubeParams(*max(candidates))


def tube_parameters_from_boundary(word: Union[str, Patch]) -> TubeParams:
    """Chiral vector of the tube a boundary closes, from its cyclic degree word.

    Walking the boundary in the hexagonal lattice, a degree-2 vertex turns one
    way and a degree-3 vertex the other; the closing displacement is the
    chiral vector.
    """
    if isinstance(word, Patch):
        word = word.degree_word
    if word.count('2') != word.count('3'):
        raise PatchError(f"Boundary {word!r} does not close a tube", code='structure')
    x = y = 0
    direction = 0
    for degree in word:
        dx, dy = _DIRECTIONS[direction]
        x, y = x + dx, y + dy
        direction = (direction + (1 if degree == '2' else -1)) % 6
    if (y - x) % 3:
        raise PatchError(f"Boundary {word!r} is not a lattice loop", code='structure')
    m = (y - x) // 3
    return _normalize(x + m, m)
