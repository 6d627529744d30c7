"""Face spirals.

A spiral lists the faces of a fullerene so that every face after the first
two touches the face before it and the oldest face that still has unplaced
neighbours. The face-size sequence of a spiral determines the fullerene; a
spiral is written compactly as the 12 (1-based) positions of its pentagons.

Winding works on the dual triangulation: faces are dual vertices, every
placed face is connected to the open boundary ring, and each connection
records an oriented dual triangle. The triangles are turned back into the
cubic graph by :func:`apps.core.embedding.plane_graph_from_triangles`.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from apps.core.embedding import plane_graph_from_triangles
from apps.core.exceptions import InvalidGraphError, SpiralError
from apps.core.graph import FullereneGraph, PlaneGraph, validate_fullerene

logger = logging.getLogger(__name__)

PENTAGON = 5
HEXAGON = 6


@dataclass(frozen=True, order=True)
class SpiralCode:
    n: int
    positions: Tuple[int, ...]

    def __post_init__(self):
        positions = tuple(self.positions)
        object.__setattr__(self, 'positions', positions)
        if self.n < 20 or self.n % 2:
            raise SpiralError(f"No fullerene spiral for n = {self.n}", code='positions')
        if len(positions) != 12:
            raise SpiralError(f"Expected 12 pentagon positions, got {len(positions)}", code='positions')
        if any(b <= a for a, b in zip(positions, positions[1:])):
            raise SpiralError("Pentagon positions must be strictly increasing", code='positions')
        if positions[0] < 1 or positions[-1] > self.face_count:
            raise SpiralError(
                f"Pentagon positions must lie in 1..{self.face_count}", code='positions'
            )

    @property
    def face_count(self) -> int:
        return self.n // 2 + 2

    def face_sizes(self) -> Tuple[int, ...]:
        sizes = [HEXAGON] * self.face_count
        for p in self.positions:
            sizes[p - 1] = PENTAGON
        return tuple(sizes)

    @classmethod
    def from_face_sizes(cls, sizes: Sequence[int]) -> 'SpiralCode':
        n = 2 * (len(sizes) - 2)
        return cls(n, tuple(i + 1 for i, s in enumerate(sizes) if s == PENTAGON))

    @classmethod
    def parse(cls, text: str) -> 'SpiralCode':
        """Parse ``"n: p1 p2 ... p12"``."""
        head, sep, tail = text.partition(':')
        if not sep:
            raise SpiralError(f"Spiral text {text!r} lacks 'n:'", code='positions')
        try:
            return cls(int(head), tuple(int(t) for t in tail.replace(',', ' ').split()))
        except ValueError as exc:
            raise SpiralError(f"Malformed spiral text {text!r}", code='positions') from exc

    def __str__(self) -> str:
        return f"{self.n}: " + ' '.join(str(p) for p in self.positions)


class SpiralWinder:
    """Incremental windup of a face-size sequence.

    ``push`` places the next face and returns False as soon as the sequence
    can no longer close into a sphere; the winder is then unusable. Use
    ``copy`` to branch during a search.
    """

    __slots__ = ('face_count', 'sizes', 'remaining', 'open', 'triangles')

    def __init__(self, face_count: int, record: bool = False):
        self.face_count = face_count
        self.sizes: List[int] = []
        self.remaining: List[int] = []
        self.open: List[int] = []
        self.triangles: Optional[List[Tuple[int, int, int]]] = [] if record else None

    def copy(self) -> 'SpiralWinder':
        clone = SpiralWinder.__new__(SpiralWinder)
        clone.face_count = self.face_count
        clone.sizes = self.sizes[:]
        clone.remaining = self.remaining[:]
        clone.open = self.open[:]
        clone.triangles = None if self.triangles is None else self.triangles[:]
        return clone

    @property
    def placed(self) -> int:
        return len(self.sizes)

    @property
    def complete(self) -> bool:
        return self.placed == self.face_count

    def _triangle(self, x: int, y: int, z: int) -> None:
        if self.triangles is not None:
            self.triangles.append((x, y, z))

    def push(self, size: int) -> bool:
        k = self.placed
        if k >= self.face_count:
            return False
        self.sizes.append(size)
        if k == 0:
            self.remaining.append(size)
            self.open.append(0)
            return True
        if k == 1:
            self.remaining[0] -= 1
            self.remaining.append(size - 1)
            self.open.append(1)
            return True
        if k == self.face_count - 1:
            return self._close(size)

        remaining, ring = self.remaining, self.open
        front, back = ring[0], ring[-1]
        remaining.append(size - 2)
        remaining[front] -= 1
        remaining[back] -= 1
        self._triangle(front, back, k)
        while True:
            if remaining[ring[0]] < 0 or remaining[ring[-1]] < 0:
                return False
            if remaining[ring[-1]] == 0:
                if len(ring) < 3:
                    return False
                popped = ring.pop()
                self._triangle(k, popped, ring[-1])
                remaining[k] -= 1
                remaining[ring[-1]] -= 1
            elif remaining[ring[0]] == 0:
                if len(ring) < 3:
                    return False
                popped = ring.pop(0)
                self._triangle(popped, k, ring[0])
                remaining[k] -= 1
                remaining[ring[0]] -= 1
            else:
                break
        if remaining[k] <= 0:
            return False
        ring.append(k)
        return True

    def _close(self, size: int) -> bool:
        k = self.placed - 1
        ring = self.open
        if len(ring) != size or any(self.remaining[x] != 1 for x in ring):
            return False
        self.remaining.append(0)
        for i, x in enumerate(ring):
            self.remaining[x] = 0
            self._triangle(ring[(i + 1) % len(ring)], x, k)
        self.open = []
        return True


def wind_face_sizes(sizes: Sequence[int]) -> Tuple[PlaneGraph, Dict[int, int]]:
    """Cubic plane graph for a face-size sequence, plus spiral index -> face id."""
    winder = SpiralWinder(len(sizes), record=True)
    for index, size in enumerate(sizes):
        if not winder.push(size):
            raise SpiralError(f"Spiral does not wind at face {index + 1}", code='winding')
    try:
        return plane_graph_from_triangles(winder.triangles)
    except InvalidGraphError as exc:
        raise SpiralError(f"Spiral closes into an invalid graph: {exc.messages[0]}", code='closure') from exc


def wind_from_spiral(code: SpiralCode) -> FullereneGraph:
    graph, _ = wind_face_sizes(code.face_sizes())
    try:
        return validate_fullerene(graph)
    except InvalidGraphError as exc:
        raise SpiralError(f"Spiral {code} is not a fullerene: {exc.messages[0]}", code='closure') from exc


class _Rotations:
    """Cyclic face-neighbour lookup for unwinding spirals."""

    def __init__(self, F: FullereneGraph):
        self.neighbors = F.face_neighbors
        self.position = [{g: i for i, g in enumerate(nb)} for nb in self.neighbors]

    def step(self, face: int, other: int, forward: bool) -> Optional[int]:
        index = self.position[face].get(other)
        if index is None:
            return None
        nb = self.neighbors[face]
        return nb[(index + (1 if forward else -1)) % len(nb)]


def spiral_from_start(
    F: FullereneGraph,
    first: int,
    second: int,
    forward: bool = True,
    bound: Optional[Sequence[int]] = None,
    _rotations: Optional[_Rotations] = None,
) -> Optional[List[int]]:
    """Face order of the spiral starting ``first``, ``second``; None if it fails.

    With ``bound`` (a face-size sequence) the walk stops as soon as its sizes
    exceed the bound lexicographically.
    """
    rotations = _rotations or _Rotations(F)
    if second not in rotations.position[first]:
        return None
    sizes = F.face_sizes
    order = [first, second]
    used = [False] * F.face_count
    used[first] = used[second] = True
    # unplaced neighbours per face
    open_count = [
        sum(1 for g in rotations.neighbors[x] if not used[g]) for x in range(F.face_count)
    ]
    tight = bound is not None
    if tight:
        for i, face in enumerate(order):
            if sizes[face] != bound[i]:
                if sizes[face] > bound[i]:
                    return None
                tight = False
                break
    front = 0
    while len(order) < F.face_count:
        while front < len(order) and open_count[order[front]] == 0:
            front += 1
        if front >= len(order):
            return None
        face = rotations.step(order[front], order[-1], forward)
        if face is None or used[face]:
            return None
        if tight:
            expected = bound[len(order)]
            if sizes[face] > expected:
                return None
            if sizes[face] < expected:
                tight = False
        order.append(face)
        used[face] = True
        for other in rotations.neighbors[face]:
            open_count[other] -= 1
    return order


def _starts(F: FullereneGraph, faces: Sequence[int]):
    for a in faces:
        for b in F.face_neighbors[a]:
            yield a, b, True
            yield a, b, False


def best_spiral(F: FullereneGraph) -> Tuple[Tuple[int, ...], List[int]]:
    """Lexicographically smallest face-size sequence and its face order."""
    rotations = _Rotations(F)
    best_sizes: Optional[Tuple[int, ...]] = None
    best_order: Optional[List[int]] = None
    # a pentagon start always wins when one closes
    for faces in (F.pentagon_indices, range(F.face_count)):
        for a, b, forward in _starts(F, faces):
            order = spiral_from_start(F, a, b, forward, best_sizes, rotations)
            if order is None:
                continue
            sizes = tuple(F.face_sizes[x] for x in order)
            if best_sizes is None or sizes < best_sizes:
                best_sizes, best_order = sizes, order
        if best_sizes is not None:
            return best_sizes, best_order
    raise SpiralError(f"No face spiral closes on {F!r}", code='unspirallable')


def canonical_spiral(F: FullereneGraph) -> SpiralCode:
    sizes, _ = best_spiral(F)
    return SpiralCode.from_face_sizes(sizes)


def is_canonical_spiral(F: FullereneGraph, sizes: Sequence[int]) -> bool:
    """True iff no spiral of ``F`` has a face-size sequence below ``sizes``."""
    sizes = tuple(sizes)
    rotations = _Rotations(F)
    for a, b, forward in _starts(F, F.pentagon_indices):
        order = spiral_from_start(F, a, b, forward, sizes, rotations)
        if order is not None and tuple(F.face_sizes[x] for x in order) < sizes:
            return False
    return True
