"""Conversions between cubic plane graphs and their dual triangulations,
and a canonical code for connected plane graphs."""
from collections import deque
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from apps.core.exceptions import InvalidGraphError
from apps.core.graph import FullereneGraph, PlaneGraph

Triangle = Tuple[Hashable, Hashable, Hashable]


def triangles_from_fullerene(F: FullereneGraph) -> List[Triangle]:
    """Oriented dual triangles, one per vertex, listed in vertex order.

    Feeding the result to :func:`plane_graph_from_triangles` rebuilds ``F``
    with the same orientation and vertex numbering.
    """
    rot = F.graph.rotation
    return [tuple(F.dart_face[(v, u)] for u in rot[v]) for v in range(F.n)]


def plane_graph_from_triangles(
    triangles: Sequence[Triangle],
) -> Tuple[PlaneGraph, Dict[Hashable, int]]:
    """Cubic plane graph dual to a consistently oriented triangulation.

    Vertex ``i`` of the result is ``triangles[i]``. The second value maps each
    triangulation vertex to the id of the face it becomes.
    """
    owner: Dict[Tuple[Hashable, Hashable], int] = {}
    for t, (x, y, z) in enumerate(triangles):
        for dart in ((x, y), (y, z), (z, x)):
            if dart in owner:
                raise InvalidGraphError(
                    f"Triangle edge {dart} is used twice with one orientation",
                    code='rotation',
                )
            owner[dart] = t
    rotation = []
    for x, y, z in triangles:
        try:
            rotation.append((owner[(y, x)], owner[(z, y)], owner[(x, z)]))
        except KeyError as exc:
            raise InvalidGraphError(
                f"Triangulation is not closed at edge {exc.args[0]}", code='rotation'
            ) from exc
    graph = PlaneGraph(rotation)
    face_of: Dict[Hashable, int] = {}
    for face in graph.faces:
        common = set(triangles[face.boundary[0]])
        for t in face.boundary[1:]:
            common &= set(triangles[t])
        if len(common) != 1:
            raise InvalidGraphError(
                f"Face {face.id} does not surround a single triangulation vertex",
                code='rotation',
            )
        face_of[common.pop()] = face.id
    return graph, face_of


def canonical_code(
    graph: PlaneGraph, mirror: bool = True, roots: Optional[Iterable[Tuple[int, int]]] = None
) -> Tuple[int, ...]:
    """Lexicographically smallest breadth-first code over all starting darts.

    Two connected plane graphs get the same code iff they are isomorphic as
    embedded graphs (orientation-reversing isomorphisms allowed when
    ``mirror`` is set). ``roots`` restricts the starting darts; the set must
    be mapped to itself by every isomorphism that should be recognised.
    """
    best = None
    senses = (True, False) if mirror else (True,)
    for u, v in (graph.darts() if roots is None else roots):
        for forward in senses:
            code = _code_from(graph, u, v, forward, best)
            if code is not None and (best is None or code < best):
                best = code
    return tuple(best) if best is not None else ()


def _code_from(graph, root, first, forward, bound):
    step = graph.succ if forward else graph.pred
    number = {root: 1}
    reference = {root: first}
    order = deque([root])
    code: List[int] = []
    while order:
        x = order.popleft()
        start = reference[x]
        nb = start
        for _ in range(graph.degree(x)):
            if nb not in number:
                number[nb] = len(number) + 1
                reference[nb] = x
                order.append(nb)
            code.append(number[nb])
            nb = step(x, nb)
        code.append(0)
        if bound is not None:
            head = bound[:len(code)]
            if code > head:
                return None
            if code < head:
                bound = None
    return code
