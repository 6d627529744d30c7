"""Automorphisms of embedded fullerene graphs.

An automorphism of a cubic plane graph is fixed by the image of one dart and
whether it keeps or reverses the rotation system, so the group is found by
trying every dart as the image of a root dart in both senses.
"""
import logging
from collections import deque
from dataclasses import dataclass
from math import lcm
from typing import FrozenSet, List, Optional, Tuple

from apps.core.exceptions import SymmetryError
from apps.core.graph import FullereneGraph

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class Automorphism:
    permutation: Permutation
    reversing: bool

    @property
    def order(self) -> int:
        seen = [False] * len(self.permutation)
        result = 1
        for start in range(len(self.permutation)):
            if seen[start]:
                continue
            length = 0
            v = start
            while not seen[v]:
                seen[v] = True
                v = self.permutation[v]
                length += 1
            result = lcm(result, length)
        return result

    @property
    def is_identity(self) -> bool:
        return not self.reversing and all(i == p for i, p in enumerate(self.permutation))


@dataclass
class AutomorphismGroup:
    elements: List[Automorphism]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rotation_order(self) -> int:
        return sum(1 for g in self.elements if not g.reversing)

    @property
    def rotations(self) -> List[Automorphism]:
        return [g for g in self.elements if not g.reversing]

    @property
    def improper(self) -> List[Automorphism]:
        return [g for g in self.elements if g.reversing]


def _map_from(F: FullereneGraph, root: Tuple[int, int], target: Tuple[int, int], reversing: bool) -> Optional[Permutation]:
    graph = F.graph
    step = graph.pred if reversing else graph.succ
    n = graph.vertex_count
    image = [-1] * n
    taken = [False] * n
    x0, a0 = root
    y0, b0 = target
    image[x0] = y0
    taken[y0] = True
    queue = deque([(x0, a0, b0)])
    while queue:
        x, a, b = queue.popleft()
        y = image[x]
        for _ in range(graph.degree(x)):
            if image[a] == -1:
                if taken[b]:
                    return None
                image[a] = b
                taken[b] = True
                queue.append((a, x, y))
            elif image[a] != b:
                return None
            a = graph.succ(x, a)
            b = step(y, b)
    return tuple(image)


def automorphisms(F: FullereneGraph) -> AutomorphismGroup:
    rotation = F.graph.rotation
    root = (0, rotation[0][0])
    sizes = F.face_sizes
    left, right = sizes[F.dart_face[root]], sizes[F.dart_face[(root[1], root[0])]]
    elements = []
    for dart in F.graph.darts():
        dl, dr = sizes[F.dart_face[dart]], sizes[F.dart_face[(dart[1], dart[0])]]
        for reversing in (False, True):
            # faces keep their sizes; reversal swaps the two sides of a dart
            if (dl, dr) != ((right, left) if reversing else (left, right)):
                continue
            permutation = _map_from(F, root, dart, reversing)
            if permutation is not None:
                elements.append(Automorphism(permutation, reversing))
    group = AutomorphismGroup(elements)
    if group.order % group.rotation_order or group.order // group.rotation_order not in (1, 2):
        raise SymmetryError(f"Inconsistent automorphism group of order {group.order}")
    for g in group.rotations:
        if not g.is_identity and g.permutation[root[0]] == root[0] and g.permutation[root[1]] == root[1]:
            raise SymmetryError("A non-trivial rotation fixes a dart")
    return group


@dataclass(frozen=True)
class FixedSites:
    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    faces: Tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.vertices) + len(self.edges) + len(self.faces)

    def as_set(self) -> FrozenSet[tuple]:
        return frozenset(
            [('v', v) for v in self.vertices]
            + [('e', e) for e in self.edges]
            + [('f', f) for f in self.faces]
        )


def fixed_sites(F: FullereneGraph, g: Automorphism) -> FixedSites:
    """Vertices, edges and faces mapped onto themselves by ``g``."""
    p = g.permutation
    vertices = tuple(v for v in range(F.n) if p[v] == v)
    edges = tuple(
        (u, v) for u, v in F.graph.edges() if {p[u], p[v]} == {u, v} and p[u] != u
    )
    faces = tuple(
        f.id for f in F.faces if {p[x] for x in f.boundary} == set(f.boundary)
    )
    return FixedSites(vertices, edges, faces)
