"""Isomer enumeration.

Native mode runs an orderly search over face-size sequences: faces are
placed one at a time with the spiral winder, pentagons tried before
hexagons, and every sequence that closes is kept only if it is the canonical
spiral of the fullerene it winds into. Output therefore comes in canonical
spiral order with exactly one graph per isomorphism class.

The search splits into chunks keyed by the first two pentagon positions. The
first is always 1 for a canonical spiral, so a chunk is named by the second.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import BinaryIO, Callable, Iterator, List, Optional, Sequence, Tuple

from apps.core.exceptions import SpiralError
from apps.core.graph import FullereneGraph, validate_fullerene
from apps.planarcode.services.codec import read_planar_code
from apps.spirals.services.spiral import (
    HEXAGON,
    PENTAGON,
    SpiralCode,
    SpiralWinder,
    is_canonical_spiral,
    wind_face_sizes,
)

logger = logging.getLogger(__name__)

NATIVE = 'native'
EXTERNAL = 'external'

ChunkKey = Tuple[int, int]
Predicate = Callable[[FullereneGraph], bool]


def is_fullerene_order(n: int) -> bool:
    return n >= 20 and n % 2 == 0 and n != 22


@dataclass
class EnumerationTask:
    n: int
    mode: str = NATIVE
    source: Optional[BinaryIO] = None
    filters: List[Predicate] = field(default_factory=list)
    jobs: int = 1
    extended: bool = False

    def __post_init__(self):
        if self.mode not in (NATIVE, EXTERNAL):
            raise ValueError(f"Unknown enumeration mode {self.mode!r}")
        if self.mode == EXTERNAL and self.source is None:
            raise ValueError("External enumeration needs a planar_code source")

    @property
    def face_count(self) -> int:
        return self.n // 2 + 2

    def accepts(self, F: FullereneGraph) -> bool:
        return all(predicate(F) for predicate in self.filters)


def chunk_keys(n: int) -> List[ChunkKey]:
    f = n // 2 + 2
    # 11 pentagons still have to fit after the second one
    return [(1, second) for second in range(2, f - 9)]


def _prefix(key: ChunkKey) -> List[int]:
    first, second = key
    sizes = [HEXAGON] * second
    sizes[first - 1] = PENTAGON
    sizes[second - 1] = PENTAGON
    return sizes


def enumerate_chunk(n: int, key: ChunkKey) -> List[Tuple[int, ...]]:
    """Canonical pentagon-position lists of C_n whose spiral starts with ``key``."""
    f = n // 2 + 2
    winder = SpiralWinder(f)
    prefix = _prefix(key)
    for size in prefix:
        if not winder.push(size):
            return []
    found: List[Tuple[int, ...]] = []
    _search(winder, 12 - prefix.count(PENTAGON), found)
    return found


def _search(winder: SpiralWinder, pentagons_left: int, found: List[Tuple[int, ...]]) -> None:
    faces_left = winder.face_count - winder.placed
    if faces_left == 0:
        if pentagons_left == 0:
            _accept(winder.sizes, found)
        return
    for size in (PENTAGON, HEXAGON):
        left = pentagons_left - (size == PENTAGON)
        if left < 0 or left > faces_left - 1:
            continue
        child = winder.copy()
        if child.push(size):
            _search(child, left, found)


def _accept(sizes: Sequence[int], found: List[Tuple[int, ...]]) -> None:
    try:
        graph, _ = wind_face_sizes(sizes)
    except SpiralError:
        return
    F = validate_fullerene(graph)
    if is_canonical_spiral(F, sizes):
        found.append(SpiralCode.from_face_sizes(sizes).positions)


def canonical_spirals(n: int, jobs: int = 1) -> Iterator[SpiralCode]:
    """Canonical spirals of every C_n isomer, in increasing order."""
    if not is_fullerene_order(n):
        logger.warning(f"No fullerene has {n} vertices; enumeration is empty")
        return
    keys = chunk_keys(n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            # map keeps chunk order, so output order does not depend on jobs
            for chunk in executor.map(enumerate_chunk, [n] * len(keys), keys):
                for positions in chunk:
                    yield SpiralCode(n, positions)
    else:
        for key in keys:
            for positions in enumerate_chunk(n, key):
                yield SpiralCode(n, positions)


def generate_isomers(task: EnumerationTask) -> Iterator[FullereneGraph]:
    """One fullerene per isomorphism class, filtered by ``task.filters``."""
    if task.mode == EXTERNAL:
        yield from _ingest(task)
        return
    for code in canonical_spirals(task.n, task.jobs):
        graph, _ = wind_face_sizes(code.face_sizes())
        F = validate_fullerene(graph)
        if task.accepts(F):
            yield F


def _ingest(task: EnumerationTask) -> Iterator[FullereneGraph]:
    for index, graph in enumerate(read_planar_code(task.source, extended=task.extended), start=1):
        F = validate_fullerene(graph)
        if task.n and F.n != task.n:
            continue
        if task.accepts(F):
            yield F
        if index % 10000 == 0:
            logger.info(f"Ingested {index} graphs")


def count_isomers(n: int, jobs: int = 1) -> int:
    return sum(1 for _ in canonical_spirals(n, jobs))
