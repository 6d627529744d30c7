"""Pentagon clusters, incidence partitions and separation numbers."""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

import networkx as nx

from apps.core.exceptions import InvalidGraphError
from apps.core.graph import FullereneGraph, face_distances_from
from apps.patches.services.patch import Patch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PentagonCluster:
    faces: FrozenSet[int]

    @property
    def size(self) -> int:
        return len(self.faces)

    def __contains__(self, face_id: int) -> bool:
        return face_id in self.faces

    def __repr__(self) -> str:
        return f'PentagonCluster({sorted(self.faces)})'


def pentagon_clusters(F: FullereneGraph) -> List[PentagonCluster]:
    """Maximal edge-connected pentagon sets, largest first, then by lowest face id."""
    pentagon_graph = F.dual_graph.subgraph(F.pentagon_indices)
    clusters = [PentagonCluster(frozenset(c)) for c in nx.connected_components(pentagon_graph)]
    clusters.sort(key=lambda c: (-c.size, min(c.faces)))
    return clusters


def pip(F: FullereneGraph) -> Tuple[int, ...]:
    return tuple(c.size for c in pentagon_clusters(F))


def cluster_distance(F: FullereneGraph, C1: PentagonCluster, C2: PentagonCluster) -> int:
    if C1 == C2:
        raise InvalidGraphError("Cluster distance needs two distinct clusters", code='cluster')
    distances = face_distances_from(F, C1.faces)
    return min(distances[f] for f in C2.faces)


def separation_number(F: FullereneGraph) -> Optional[int]:
    """Smallest distance between two clusters; None with a single cluster."""
    clusters = pentagon_clusters(F)
    if len(clusters) < 2:
        return None
    best = None
    for i, C1 in enumerate(clusters[:-1]):
        distances = face_distances_from(F, C1.faces)
        for C2 in clusters[i + 1:]:
            d = min(distances[f] for f in C2.faces)
            if best is None or d < best:
                best = d
    return best


def pentagon_adjacencies(F: FullereneGraph) -> int:
    """Number of edges shared by two pentagons."""
    return F.dual_graph.subgraph(F.pentagon_indices).number_of_edges()


def complement_components(F: FullereneGraph, C: PentagonCluster) -> List[FrozenSet[int]]:
    """Face sets of the edge-connected components outside ``C``, largest first."""
    rest = [f for f in range(F.face_count) if f not in C.faces]
    components = [frozenset(c) for c in nx.connected_components(F.dual_graph.subgraph(rest))]
    components.sort(key=lambda c: (-len(c), min(c)))
    return components


def complement(F: FullereneGraph, C: PentagonCluster) -> List[Patch]:
    """The complement of ``C`` as a list of patches."""
    return [Patch.from_faces(F, faces) for faces in complement_components(F, C)]


def closed_cluster_faces(F: FullereneGraph, C: PentagonCluster) -> FrozenSet[int]:
    """Cluster faces together with the hexagon-only regions they enclose."""
    if C.size == 12:
        return C.faces
    faces = set(C.faces)
    for component in complement_components(F, C):
        if not any(F.is_pentagon(f) for f in component):
            faces |= component
    return frozenset(faces)
