"""Patches: 2-connected plane disks of pentagons and hexagons.

A patch is stored as a plane graph (rotation system, same face tracing rule
as closed graphs) plus the vertex walk of its outer face. Boundary vertices
have degree 2 or 3, interior vertices degree 3.

Patches grow with :meth:`PatchBuilder.attach_face`, which puts a new face on
the outside of a boundary path ``a, w1, ..., b`` where ``a`` and ``b`` have
degree 2 and the inner path vertices degree 3. On a run of ``i`` degree-3
vertices a hexagon changes the boundary length by ``4 - 2i``.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from apps.core.embedding import canonical_code
from apps.core.exceptions import InvalidGraphError, PatchError
from apps.core.graph import Face, FullereneGraph, PlaneGraph

logger = logging.getLogger(__name__)


def least_rotation(word: Sequence) -> int:
    """Start index of the lexicographically least rotation of ``word``."""
    n = len(word)
    best = 0
    for start in range(1, n):
        for offset in range(n):
            a, b = word[(start + offset) % n], word[(best + offset) % n]
            if a != b:
                if a < b:
                    best = start
                break
    return best


@dataclass(frozen=True)
class Run:
    """Maximal boundary run ``2 3^length 2`` starting at boundary index ``start``."""

    start: int
    length: int


@dataclass(frozen=True, eq=False)
class Patch:
    graph: PlaneGraph
    outer: Tuple[int, ...]

    @property
    def outer_face_id(self) -> int:
        return self.graph.dart_face[(self.outer[0], self.outer[1])]

    @property
    def faces(self) -> List[Face]:
        """Interior faces."""
        outer = self.outer_face_id
        return [f for f in self.graph.faces if f.id != outer]

    @property
    def p(self) -> int:
        return sum(1 for f in self.faces if f.size == 5)

    @property
    def h(self) -> int:
        return sum(1 for f in self.faces if f.size == 6)

    @property
    def b(self) -> int:
        return len(self.outer)

    @property
    def degree_word(self) -> str:
        return ''.join(str(self.graph.degree(v)) for v in self.outer)

    def runs(self, canonical: bool = True) -> List[Run]:
        """Maximal runs of degree-3 vertices, scanned from the canonical start."""
        word = self.degree_word
        origin = least_rotation(word) if canonical else 0
        b = len(word)
        twos = [i for i in ((origin + k) % b for k in range(b)) if word[i] == '2']
        runs = []
        for j, i in enumerate(twos):
            nxt = twos[(j + 1) % len(twos)]
            runs.append(Run(i, (nxt - i - 1) % b))
        return runs

    def to_builder(self) -> 'PatchBuilder':
        return PatchBuilder([list(r) for r in self.graph.rotation], list(self.outer))

    def code(self) -> Tuple[int, ...]:
        """Isomorphism-invariant code; the outer face is fixed by every isomorphism."""
        roots = list(zip(self.outer, self.outer[1:] + self.outer[:1]))
        roots += [(v, u) for u, v in roots]
        return canonical_code(self.graph, mirror=True, roots=roots)

    def __repr__(self) -> str:
        return f'Patch(p={self.p}, h={self.h}, b={self.b})'

    @classmethod
    def from_faces(cls, F: FullereneGraph, face_ids: Iterable[int]) -> 'Patch':
        graph, vertex_map = face_region_graph(F, face_ids)
        region = set(face_ids)
        inverse = {new: old for old, new in vertex_map.items()}
        outer = [
            face for face in graph.faces
            if F.dart_face[(inverse[face.boundary[0]], inverse[face.boundary[1]])] not in region
        ]
        if len(outer) != 1:
            raise PatchError(
                f"Face set has {len(outer)} boundary components, expected 1", code='structure'
            )
        patch = cls(graph, outer[0].boundary)
        validate_patch(patch)
        return patch


def face_region_graph(F: FullereneGraph, face_ids: Iterable[int]) -> Tuple[PlaneGraph, Dict[int, int]]:
    """Plane graph formed by the edges of the given faces, relabeled 0..V-1.

    Rotations keep the fullerene's cyclic order, so the region's faces trace
    exactly as in ``F``. Returns the graph and the old -> new vertex map.
    """
    region = set(face_ids)
    kept = set()
    for fid in region:
        for a, b in F.faces[fid].darts():
            kept.add((a, b))
            kept.add((b, a))
    vertices = sorted({a for a, _ in kept})
    vertex_map = {v: i for i, v in enumerate(vertices)}
    rotation = [
        [vertex_map[u] for u in F.rotation[v] if (v, u) in kept] for v in vertices
    ]
    return PlaneGraph(rotation), vertex_map


def validate_patch(patch: Patch) -> Patch:
    graph = patch.graph
    if len(set(patch.outer)) != len(patch.outer):
        raise PatchError("Outer boundary is not a simple cycle", code='structure')
    try:
        outer_id = patch.outer_face_id
    except (KeyError, IndexError, InvalidGraphError) as exc:
        raise PatchError("Outer walk is not a face", code='structure') from exc
    if graph.faces[outer_id].size != len(patch.outer):
        raise PatchError("Outer walk does not match its face", code='structure')
    if not nx.is_biconnected(graph.to_networkx()):
        raise PatchError("Patch is not 2-connected", code='structure')
    if graph.vertex_count - graph.edge_count + len(graph.faces) != 2:
        raise PatchError("Patch violates the Euler relation", code='structure')
    for face in patch.faces:
        if face.size not in (5, 6):
            raise PatchError(f"Interior face of size {face.size}", code='structure')
    boundary = set(patch.outer)
    for v in range(graph.vertex_count):
        allowed = (2, 3) if v in boundary else (3,)
        if graph.degree(v) not in allowed:
            raise PatchError(f"Vertex {v} has degree {graph.degree(v)}", code='structure')
    word = patch.degree_word
    if patch.p < 6 and word.count('2') <= word.count('3'):
        raise PatchError("Patch with fewer than 6 pentagons has too few degree-2 vertices", code='structure')
    return patch


class PatchBuilder:
    """Mutable patch under construction."""

    def __init__(self, rotation: List[List[int]], boundary: List[int]):
        self.rotation = rotation
        self.boundary = boundary

    @classmethod
    def single_face(cls, size: int) -> 'PatchBuilder':
        rotation = [[(i - 1) % size, (i + 1) % size] for i in range(size)]
        # outer walk runs 0, 1, 2, ... under the tracing rule
        return cls(rotation, list(range(size)))

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def attach_face(self, start: int, length: int, size: int) -> List[int]:
        """Attach a face of ``size`` along boundary path ``boundary[start : start+length]``.

        Returns the boundary of the new face (its vertices, starting at ``a``).
        """
        b_len = len(self.boundary)
        if not 1 <= length < b_len:
            raise PatchError(f"Path length {length} does not fit boundary {b_len}", code='growth')
        ring = self.boundary[start:] + self.boundary[:start]
        path = ring[:length + 1]
        a, b = path[0], path[-1]
        if self.degree(a) != 2 or self.degree(b) != 2:
            raise PatchError("Path endpoints must have degree 2", code='growth')
        if any(self.degree(w) != 3 for w in path[1:-1]):
            raise PatchError("Inner path vertices must have degree 3", code='growth')
        new_count = size - length - 1
        if new_count < 0:
            raise PatchError(f"A {size}-gon cannot cover a path of length {length}", code='growth')
        if new_count == 0 and b in self.rotation[a]:
            raise PatchError("Closing edge would duplicate an existing edge", code='growth')

        fresh = list(range(self.vertex_count, self.vertex_count + new_count))
        chain = [a] + fresh + [b]
        for j, u in enumerate(fresh, start=1):
            self.rotation.append([chain[j - 1], chain[j + 1]])
        rot_b = self.rotation[b]
        rot_b.insert(rot_b.index(path[-2]) + 1, chain[-2])
        rot_a = self.rotation[a]
        rot_a.insert(rot_a.index(path[1]), chain[1])
        self.boundary = [a] + fresh + ring[length:]
        return path + fresh[::-1]

    def degree_word(self) -> str:
        return ''.join(str(self.degree(v)) for v in self.boundary)

    def freeze(self, validate: bool = True) -> Patch:
        try:
            graph = PlaneGraph(self.rotation)
        except InvalidGraphError as exc:
            raise PatchError(f"Patch graph is invalid: {exc.messages[0]}", code='structure') from exc
        patch = Patch(graph, tuple(self.boundary))
        if validate:
            validate_patch(patch)
        return patch


def single_face_patch(size: int) -> Patch:
    return PatchBuilder.single_face(size).freeze()


def boundary_code(patch: Patch) -> str:
    """Degree word of the outer cycle, least rotation."""
    word = patch.degree_word
    start = least_rotation(word)
    return word[start:] + word[:start]


def grow_sizes(sizes: Sequence[int], builder: Optional[PatchBuilder] = None) -> PatchBuilder:
    """Grow a patch face by face, always at the first shortest run."""
    sizes = list(sizes)
    if builder is None:
        builder = PatchBuilder.single_face(sizes.pop(0))
    for size in sizes:
        run = min(builder.freeze(validate=False).runs(), key=lambda r: r.length)
        builder.attach_face(run.start, run.length + 1, size)
    return builder
