"""Reinstating pentagon clusters after a (5,0) inflation.

The inflation pulls the pentagons of a cluster apart. The region descending
from the cluster is cut out and refilled with a patch that has the same
boundary and contains the original cluster surrounded by hexagons. Such a
patch is a piece of the hexagon completion of the cluster: the unique surface
obtained by wrapping the cluster in layer after layer of hexagons. The search
walks the region's boundary word from every dart of the completion until the
walk closes around the cluster.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from django.conf import settings

from apps.core.exceptions import (
    InvalidGraphError,
    PartitionError,
    PatchError,
    PentaclusterError,
    ReplacementNotFoundError,
)
from apps.core.graph import (
    Dart,
    FullereneGraph,
    PlaneGraph,
    region_boundary,
    region_degree_word,
    validate_fullerene,
)
from apps.clusters.services.clusters import (
    PentagonCluster,
    closed_cluster_faces,
    pentagon_clusters,
    pip,
    separation_number,
)
from apps.goldberg.services.inflation import InflationMap, goldberg_5_0
from apps.patches.services.patch import Patch, PatchBuilder

logger = logging.getLogger(__name__)

MAX_REINSTATED_CLUSTER = 5


@dataclass(frozen=True)
class ReplacementPatch:
    """A closed walk in a hexagon completion and the faces it encloses."""

    graph: PlaneGraph
    walk: Tuple[Dart, ...]
    faces: FrozenSet[int]

    @property
    def word(self) -> str:
        return region_degree_word(self.graph, self.faces, self.walk)

    @property
    def p(self) -> int:
        return sum(1 for f in self.faces if self.graph.faces[f].size == 5)

    @property
    def h(self) -> int:
        return len(self.faces) - self.p


def _boundary_runs(builder: PatchBuilder) -> List[Tuple[int, int]]:
    """``(start, length)`` of every boundary path between consecutive degree-2 vertices."""
    word = builder.degree_word()
    b = len(word)
    twos = [i for i, c in enumerate(word) if c == '2']
    return [(i, (twos[(j + 1) % len(twos)] - i) % b or b) for j, i in enumerate(twos)]


def hexagon_completion(cluster: Patch, layers: int) -> Tuple[PlaneGraph, int]:
    """``cluster`` wrapped in ``layers`` rings of hexagons; returns the graph and its outer face id."""
    builder = cluster.to_builder()
    for _ in range(layers):
        old = set(builder.boundary)
        while True:
            runs = [
                (start, length) for start, length in _boundary_runs(builder)
                if any(builder.boundary[(start + k) % len(builder.boundary)] in old for k in range(length + 1))
            ]
            if not runs:
                break
            start, length = runs[0]
            if length > 5:
                raise PatchError(f"No hexagon fits a boundary path of length {length}", code='growth')
            builder.attach_face(start, length, 6)
    graph = PlaneGraph(builder.rotation)
    outer = graph.dart_face[(builder.boundary[0], builder.boundary[1])]
    return graph, outer


def _trace_word(graph: PlaneGraph, start: Dart, word: str) -> Optional[List[Dart]]:
    b = len(word)
    walk = [start]
    u, v = start
    seen = {u}
    for i in range(1, b + 1):
        if graph.degree(v) != 3:
            return None
        w = graph.succ(v, u)
        if word[i % b] == '3':
            w = graph.succ(v, w)
        if i == b:
            return walk if (v, w) == start else None
        if v in seen:
            return None
        seen.add(v)
        walk.append((v, w))
        u, v = v, w
    return None


def _enclosed_faces(graph: PlaneGraph, walk: Sequence[Dart]) -> Set[int]:
    cut = {frozenset(d) for d in walk}
    start = graph.dart_face[walk[0]]
    region = {start}
    queue = deque([start])
    while queue:
        face = graph.faces[queue.popleft()]
        for a, b in face.darts():
            if frozenset((a, b)) in cut:
                continue
            other = graph.dart_face[(b, a)]
            if other not in region:
                region.add(other)
                queue.append(other)
    return region


def find_replacement(cluster: Patch, word: str, max_states: Optional[int] = None) -> ReplacementPatch:
    """Patch with boundary ``word`` holding ``cluster`` and otherwise only hexagons."""
    max_states = max_states or settings.REPLACEMENT_SEARCH_MAX_STATES
    graph, outer = hexagon_completion(cluster, len(word) // 3 + 3)
    states = 0
    for start in graph.darts():
        states += 1
        if states > max_states:
            break
        walk = _trace_word(graph, start, word)
        if walk is None:
            continue
        faces = _enclosed_faces(graph, walk)
        if outer in faces:
            continue
        candidate = ReplacementPatch(graph, tuple(walk), frozenset(faces))
        if candidate.p == cluster.p:
            logger.debug(f"Replacement with {candidate.h} hexagons found after {states} states")
            return candidate
    raise ReplacementNotFoundError(
        f"No patch with boundary {word} around a {cluster.p}-pentagon cluster ({states} states tried)"
    )


def splice_region(
    F: FullereneGraph, region: FrozenSet[int], replacement: ReplacementPatch
) -> Tuple[FullereneGraph, Dict[int, int]]:
    """Replace the faces in ``region`` by ``replacement``.

    Returns the new fullerene and the new id of every face outside the region.
    """
    walk = region_boundary(F.graph, region)
    if region_degree_word(F.graph, region, walk) != replacement.word:
        raise PatchError("Replacement boundary does not match the region", code='structure')
    interior = {
        v for v in range(F.n) if all(face in region for face in F.faces_at_vertex(v))
    }
    kept = [v for v in range(F.n) if v not in interior]
    index = {v: i for i, v in enumerate(kept)}

    rg = replacement.graph
    r_walk = replacement.walk
    on_walk = {u: i for i, (u, _) in enumerate(r_walk)}
    r_interior = sorted(
        v for v in range(rg.vertex_count)
        if v not in on_walk and rg.degree(v) == 3
        and all(rg.dart_face[(v, x)] in replacement.faces for x in rg.rotation[v])
    )
    image = {v: len(kept) + j for j, v in enumerate(r_interior)}
    for i, (u, _) in enumerate(r_walk):
        image[u] = index[walk[i][0]]

    rotation: List[List[int]] = [[] for _ in range(len(kept) + len(r_interior))]
    word = replacement.word
    for v in kept:
        rotation[index[v]] = [index.get(x, -1) for x in F.rotation[v]]
    for i, (c, c_next) in enumerate(walk):
        if word[i] != '3':
            continue
        c_prev = walk[i - 1][0]
        r, r_prev = r_walk[i][0], r_walk[i - 1][0]
        old = F.graph.succ(c, c_prev)
        new = rg.succ(r, r_prev)
        row = rotation[index[c]]
        row[F.rotation[c].index(old)] = image[new]
    for v in r_interior:
        rotation[image[v]] = [image[x] for x in rg.rotation[v]]
    if any(x < 0 for row in rotation for x in row):
        raise PatchError("Region interior leaks past its boundary", code='structure')

    try:
        result = validate_fullerene(PlaneGraph(rotation))
    except InvalidGraphError as exc:
        raise PatchError(f"Spliced graph is not a fullerene: {exc.messages[0]}", code='structure') from exc

    carried = {}
    for face in F.faces:
        if face.id in region:
            continue
        a, b = face.boundary[0], face.boundary[1]
        new_id = result.dart_face[(index[a], index[b])]
        if result.faces[new_id].size != face.size:
            raise PentaclusterError(f"Face {face.id} outside the replaced region changed")
        carried[face.id] = new_id
    return result, carried


def _region_candidates(inflation: InflationMap, faces: FrozenSet[int]) -> List[FrozenSet[int]]:
    """Regions to excise: without the faces shared with neighbours first, then with them."""
    strict = inflation.strict_children(faces)
    closed = inflation.children(faces, closed=True)
    return [strict] if strict == closed else [strict, closed]


def _reinstate(
    F: FullereneGraph, regions: List[FrozenSet[int]], cluster: Patch
) -> Tuple[FullereneGraph, Dict[int, int]]:
    failure: Exception = ReplacementNotFoundError("No region to replace")
    for region in regions:
        try:
            walk = region_boundary(F.graph, region)
            word = region_degree_word(F.graph, region, walk)
            return splice_region(F, region, find_replacement(cluster, word))
        except (ReplacementNotFoundError, PatchError, InvalidGraphError) as exc:
            logger.debug(f"Region of {len(region)} faces not replaced: {exc}")
            failure = exc
    logger.error(f"No replacement for a {cluster.p}-pentagon cluster")
    raise failure


def reinstate_cluster(
    inflated: FullereneGraph,
    inflation: InflationMap,
    parent_cluster: PentagonCluster,
    target_size: Optional[int] = None,
) -> FullereneGraph:
    """Put the cluster ``parent_cluster`` of the source graph back into ``inflated``."""
    size = parent_cluster.size if target_size is None else target_size
    if size != parent_cluster.size or not 2 <= size <= MAX_REINSTATED_CLUSTER:
        raise PartitionError(
            f"Can reinstate clusters of 2 to {MAX_REINSTATED_CLUSTER} pentagons as they were, got {size}",
            code='out_of_range',
        )
    source = inflation.source
    faces = closed_cluster_faces(source, parent_cluster)
    cluster = Patch.from_faces(source, faces)
    result, _ = _reinstate(inflated, _region_candidates(inflation, faces), cluster)
    return result


def inflate_preserving_clusters(F: FullereneGraph, k: int) -> FullereneGraph:
    """``k`` rounds of inflation, each followed by reinstating every cluster of two or more."""
    if k < 1:
        raise PartitionError(f"Need at least one inflation round, got {k}", code='out_of_range')
    target = pip(F)
    if target[0] > MAX_REINSTATED_CLUSTER:
        raise PartitionError(
            f"PIP {target} has a cluster larger than {MAX_REINSTATED_CLUSTER}", code='out_of_range'
        )
    current = F
    for round_number in range(1, k + 1):
        inflated, inflation = goldberg_5_0(current)
        translate = {f: f for f in range(inflated.face_count)}
        for cluster in pentagon_clusters(current):
            if cluster.size < 2:
                continue
            faces = closed_cluster_faces(current, cluster)
            regions = [
                frozenset(translate[f] for f in region)
                for region in _region_candidates(inflation, faces)
            ]
            inflated, carried = _reinstate(inflated, regions, Patch.from_faces(current, faces))
            translate = {f: carried[t] for f, t in translate.items() if t in carried}
        if pip(inflated) != target:
            raise PentaclusterError(f"Round {round_number} changed the PIP to {pip(inflated)}")
        separation = separation_number(inflated)
        logger.info(f"Round {round_number}: C{inflated.n}, separation {separation}")
        if separation is not None and separation < 3 ** round_number:
            raise PentaclusterError(
                f"Round {round_number} reached separation {separation} < {3 ** round_number}"
            )
        current = inflated
    return current
