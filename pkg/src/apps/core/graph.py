"""Plane cubic graphs with combinatorial embeddings.

An embedding is a rotation system: for every vertex the cyclic (clockwise)
order of its neighbours. Faces are traced with the rule that the dart following
``(u, v)`` on a face is ``(v, succ_v(u))``.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from apps.core.exceptions import InvalidGraphError

logger = logging.getLogger(__name__)

MAX_VERTICES = 65534
Dart = Tuple[int, int]


@dataclass(frozen=True)
class Face:
    id: int
    boundary: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    def darts(self) -> List[Dart]:
        b = self.boundary
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]


class PlaneGraph:
    """Simple connected plane graph given by its rotation system."""

    def __init__(self, rotation: Sequence[Sequence[int]]):
        self.rotation: Tuple[Tuple[int, ...], ...] = tuple(tuple(r) for r in rotation)
        self.vertex_count = len(self.rotation)
        self._position = [
            {u: i for i, u in enumerate(r)} for r in self.rotation
        ]
        self._faces: Optional[List[Face]] = None
        self._dart_face: Optional[Dict[Dart, int]] = None
        self._check_simple()

    def _check_simple(self) -> None:
        if self.vertex_count > MAX_VERTICES:
            raise InvalidGraphError(
                f"{self.vertex_count} vertices exceed the supported maximum {MAX_VERTICES}",
                code='vertex_count',
            )
        for v, neighbours in enumerate(self.rotation):
            if len(set(neighbours)) != len(neighbours):
                raise InvalidGraphError(f"Parallel edges at vertex {v}", code='not_simple')
            for u in neighbours:
                if u == v:
                    raise InvalidGraphError(f"Loop at vertex {v}", code='not_simple')
                if not 0 <= u < self.vertex_count:
                    raise InvalidGraphError(f"Vertex {v} names unknown neighbour {u}", code='not_simple')
                if v not in self._position[u]:
                    raise InvalidGraphError(f"Edge {v}-{u} is not symmetric", code='not_simple')

    def __len__(self) -> int:
        return self.vertex_count

    def __eq__(self, other) -> bool:
        return isinstance(other, PlaneGraph) and self.rotation == other.rotation

    def __hash__(self) -> int:
        return hash(self.rotation)

    def __repr__(self) -> str:
        return f'PlaneGraph(n={self.vertex_count}, e={self.edge_count})'

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def succ(self, v: int, u: int) -> int:
        """Neighbour of ``v`` following ``u`` in the rotation."""
        r = self.rotation[v]
        return r[(self._position[v][u] + 1) % len(r)]

    def pred(self, v: int, u: int) -> int:
        r = self.rotation[v]
        return r[(self._position[v][u] - 1) % len(r)]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._position[u]

    def darts(self) -> Iterable[Dart]:
        for u, neighbours in enumerate(self.rotation):
            for v in neighbours:
                yield (u, v)

    def edges(self) -> Iterable[Tuple[int, int]]:
        for u, v in self.darts():
            if u < v:
                yield (u, v)

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        return nx.is_connected(self.to_networkx())

    @property
    def faces(self) -> List[Face]:
        if self._faces is None:
            self._faces, self._dart_face = _trace(self)
        return self._faces

    @property
    def dart_face(self) -> Dict[Dart, int]:
        if self._dart_face is None:
            self._faces, self._dart_face = _trace(self)
        return self._dart_face

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges())
        return g

    def relabeled(self, permutation: Sequence[int]) -> 'PlaneGraph':
        """Same embedding with vertex ``v`` renamed ``permutation[v]``."""
        rotation: List[Tuple[int, ...]] = [()] * self.vertex_count
        for v, neighbours in enumerate(self.rotation):
            rotation[permutation[v]] = tuple(permutation[u] for u in neighbours)
        return PlaneGraph(rotation)

    def mirrored(self) -> 'PlaneGraph':
        return PlaneGraph([tuple(reversed(r)) for r in self.rotation])


def _trace(g: PlaneGraph) -> Tuple[List[Face], Dict[Dart, int]]:
    dart_face: Dict[Dart, int] = {}
    faces: List[Face] = []
    limit = 2 * g.edge_count
    # lowest dart first keeps face ids reproducible
    for u in range(g.vertex_count):
        for v in sorted(g.rotation[u]):
            if (u, v) in dart_face:
                continue
            fid = len(faces)
            boundary = []
            a, b = u, v
            steps = 0
            while (a, b) not in dart_face:
                dart_face[(a, b)] = fid
                boundary.append(a)
                a, b = b, g.succ(b, a)
                steps += 1
                if steps > limit:
                    raise InvalidGraphError("Face walk does not terminate", code='rotation')
            if (a, b) != (u, v):
                raise InvalidGraphError(
                    f"Face walk from dart {u}->{v} closes on a foreign dart",
                    code='rotation',
                )
            faces.append(Face(fid, tuple(boundary)))
    return faces, dart_face


def trace_faces(g: PlaneGraph) -> List[Face]:
    """Faces of ``g``; every dart lies on exactly one face walk."""
    return list(g.faces)


class FullereneGraph:
    """A validated fullerene: cubic, twelve pentagons, every other face a hexagon.

    Instances are immutable; the dual graph is built lazily and cached.
    """

    def __init__(self, graph: PlaneGraph):
        self.graph = graph
        self.faces: List[Face] = graph.faces
        self.dart_face = graph.dart_face
        self.face_sizes: Tuple[int, ...] = tuple(f.size for f in self.faces)
        self.pentagon_indices: Tuple[int, ...] = tuple(
            f.id for f in self.faces if f.size == 5
        )
        self.face_neighbors: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(self.dart_face[(b, a)] for a, b in f.darts()) for f in self.faces
        )
        self._dual: Optional[nx.Graph] = None

    def __repr__(self) -> str:
        return f'FullereneGraph(n={self.n})'

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def rotation(self):
        return self.graph.rotation

    def is_pentagon(self, face_id: int) -> bool:
        return self.face_sizes[face_id] == 5

    def shared_edge(self, f1: int, f2: int) -> Optional[Tuple[int, int]]:
        """Dart of ``f1`` whose reverse lies on ``f2``, if the faces touch."""
        for a, b in self.faces[f1].darts():
            if self.dart_face[(b, a)] == f2:
                return (a, b)
        return None

    def faces_at_vertex(self, v: int) -> Tuple[int, ...]:
        return tuple(self.dart_face[(v, u)] for u in self.graph.rotation[v])

    @property
    def dual_graph(self) -> nx.Graph:
        if self._dual is None:
            self._dual = dual(self)
        return self._dual


def validate_fullerene(g: PlaneGraph) -> FullereneGraph:
    """Return ``g`` as a fullerene or raise naming the violated invariant."""
    if not g.is_connected():
        raise InvalidGraphError("Graph is disconnected", code='disconnected')
    for v in range(g.vertex_count):
        if g.degree(v) != 3:
            raise InvalidGraphError(
                f"Vertex {v} has degree {g.degree(v)}, expected 3", code='degree'
            )
    faces = g.faces
    n, e, f = g.vertex_count, g.edge_count, len(faces)
    if n - e + f != 2:
        raise InvalidGraphError(f"Euler relation fails: {n} - {e} + {f} != 2", code='euler')
    for face in faces:
        if face.size not in (5, 6):
            raise InvalidGraphError(
                f"Face {face.id} has size {face.size}", code='face_size'
            )
    pentagons = sum(1 for face in faces if face.size == 5)
    if pentagons != 12:
        raise InvalidGraphError(f"{pentagons} pentagonal faces, expected 12", code='pentagon_count')
    if n < 20 or n == 22 or n % 2:
        raise InvalidGraphError(f"No fullerene has {n} vertices", code='vertex_count')
    return FullereneGraph(g)


def dual(F: FullereneGraph) -> nx.Graph:
    """Face adjacency graph; node attribute ``size`` holds the face size."""
    d = nx.Graph()
    for face in F.faces:
        d.add_node(face.id, size=face.size)
    for fid, neighbours in enumerate(F.face_neighbors):
        for other in neighbours:
            if fid < other:
                d.add_edge(fid, other)
    return d


def face_distance(F: FullereneGraph, f1: int, f2: int) -> int:
    """Length of the shortest chain of edge-sharing faces from ``f1`` to ``f2``."""
    for fid in (f1, f2):
        if not 0 <= fid < F.face_count:
            raise InvalidGraphError(f"Unknown face id {fid}", code='face_id')
    if f1 == f2:
        return 0
    return nx.shortest_path_length(F.dual_graph, f1, f2)


def face_distances_from(F: FullereneGraph, sources: Iterable[int]) -> Dict[int, int]:
    """Distance of every face to the nearest face in ``sources``."""
    return dict(nx.multi_source_dijkstra_path_length(F.dual_graph, set(sources)))


def region_boundary(graph: PlaneGraph, region: Iterable[int]) -> List[Dart]:
    """Closed walk of darts around a set of face ids, the region on each dart's face side.

    The walk starts at the first boundary dart in dart order. Raises if the
    boundary is not a single closed walk.
    """
    region = set(region)
    dart_face = graph.dart_face
    boundary = [
        (u, v) for u, v in graph.darts()
        if dart_face[(u, v)] in region and dart_face[(v, u)] not in region
    ]
    if not boundary:
        return []
    start = boundary[0]
    walk = [start]
    u, v = start
    while True:
        w = graph.succ(v, u)
        while dart_face[(w, v)] in region:
            w = graph.succ(v, w)
        if (v, w) == start:
            break
        walk.append((v, w))
        if len(walk) > len(boundary):
            break
        u, v = v, w
    if len(walk) != len(boundary):
        raise InvalidGraphError("Region boundary is not a single closed walk", code='cycle')
    return walk


def region_degree_word(graph: PlaneGraph, region: Iterable[int], walk: Sequence[Dart]) -> str:
    """Degrees of the walk's vertices within the region, as a word of 2s and 3s."""
    region = set(region)
    dart_face = graph.dart_face
    return ''.join(
        str(1 + sum(1 for x in graph.rotation[v] if dart_face[(v, x)] in region))
        for v, _ in walk
    )
