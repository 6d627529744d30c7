"""planar_code stream reader and writer.

Layout: the 15-byte header ``>>planar_code<<`` followed by graph records. A
record is the vertex count ``n`` as one byte, then for each vertex 1..n its
neighbours in rotation order, one byte each, closed by a zero byte.

Graphs with more than 255 vertices need the extended form, enabled
explicitly: a zero byte, then ``n`` and every neighbour entry as little-endian
16-bit words, each list still closed by a (16-bit) zero.
"""
import io
import logging
import struct
from typing import BinaryIO, Iterable, Iterator, List, Union

from apps.core.exceptions import InvalidGraphError, PlanarCodeError
from apps.core.graph import MAX_VERTICES, PlaneGraph

logger = logging.getLogger(__name__)

HEADER = b'>>planar_code<<'
_WORD = struct.Struct('<H')


class PlanarCodeReader:
    """Iterate the graphs of a planar_code stream one record at a time."""

    def __init__(self, stream: BinaryIO, extended: bool = False):
        self.stream = stream
        self.extended = extended
        self.records_read = 0
        header = stream.read(len(HEADER))
        if header != HEADER:
            raise PlanarCodeError("Missing or corrupt planar_code header", code='header')

    def __iter__(self) -> Iterator[PlaneGraph]:
        while True:
            first = self.stream.read(1)
            if not first:
                return
            n = first[0]
            wide = False
            if n == 0:
                if not self.extended:
                    raise PlanarCodeError(
                        f"Record {self.records_read + 1} has n = 0; "
                        "the 2-byte extension is disabled",
                        code='empty_graph',
                    )
                n = self._read_word()
                wide = True
                if n == 0:
                    raise PlanarCodeError("Extended record has n = 0", code='empty_graph')
            yield self._read_record(n, wide)
            self.records_read += 1

    def _read_exact(self, size: int) -> bytes:
        data = self.stream.read(size)
        if len(data) != size:
            raise PlanarCodeError(
                f"Record {self.records_read + 1} is truncated", code='truncated'
            )
        return data

    def _read_word(self) -> int:
        return _WORD.unpack(self._read_exact(2))[0]

    def _read_entry(self, wide: bool) -> int:
        return self._read_word() if wide else self._read_exact(1)[0]

    def _read_record(self, n: int, wide: bool) -> PlaneGraph:
        rotation: List[List[int]] = []
        for v in range(n):
            neighbours = []
            while True:
                entry = self._read_entry(wide)
                if entry == 0:
                    break
                if entry > n:
                    raise PlanarCodeError(
                        f"Vertex {v + 1} names neighbour {entry} outside 1..{n}",
                        code='neighbor_range',
                    )
                neighbours.append(entry - 1)
            rotation.append(neighbours)
        try:
            return PlaneGraph(rotation)
        except InvalidGraphError as exc:
            raise PlanarCodeError(
                f"Record {self.records_read + 1} is inconsistent: {exc.messages[0]}",
                code='asymmetric',
            ) from exc


class PlanarCodeWriter:
    """Append graphs to a planar_code stream; the header is written first."""

    def __init__(self, stream: BinaryIO, extended: bool = False):
        self.stream = stream
        self.extended = extended
        self.records_written = 0
        stream.write(HEADER)

    def write(self, graph: PlaneGraph) -> None:
        n = graph.vertex_count
        if n <= 255:
            self.stream.write(encode_record(graph))
        elif self.extended and n <= MAX_VERTICES:
            self.stream.write(encode_extended_record(graph))
        else:
            raise PlanarCodeError(
                f"Graph with {n} vertices needs the 2-byte extension", code='too_large'
            )
        self.records_written += 1

    def write_all(self, graphs: Iterable[PlaneGraph]) -> int:
        for graph in graphs:
            self.write(graph)
        return self.records_written


def encode_record(graph: PlaneGraph) -> bytes:
    out = bytearray([graph.vertex_count])
    for neighbours in graph.rotation:
        out.extend(u + 1 for u in neighbours)
        out.append(0)
    return bytes(out)


def encode_extended_record(graph: PlaneGraph) -> bytes:
    out = bytearray(b'\x00')
    out += _WORD.pack(graph.vertex_count)
    for neighbours in graph.rotation:
        for u in neighbours:
            out += _WORD.pack(u + 1)
        out += _WORD.pack(0)
    return bytes(out)


def read_planar_code(source: Union[bytes, BinaryIO], extended: bool = False) -> Iterator[PlaneGraph]:
    """Yield the graphs of ``source`` (bytes or a binary stream) in file order."""
    stream = io.BytesIO(source) if isinstance(source, (bytes, bytearray)) else source
    return iter(PlanarCodeReader(stream, extended=extended))


def write_planar_code(graphs: Iterable[PlaneGraph], extended: bool = False) -> bytes:
    buffer = io.BytesIO()
    PlanarCodeWriter(buffer, extended=extended).write_all(graphs)
    return buffer.getvalue()
