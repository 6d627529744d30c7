"""Seed fullerenes realizing a given PIP.

The table lists one seed per partition as a canonical spiral with a sha256
checksum of its text, next to a planar_code file of the same graphs; every
entry is wound and rechecked when loaded. The table is written once by
``build-seeds``, which fails if any partition with clusters of at most five
pentagons has no seed. Lookups do not search unless asked to.
"""
import hashlib
import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence

from django.conf import settings

from apps.core.exceptions import PartitionError, SeedTableError, SpiralError
from apps.core.graph import FullereneGraph
from apps.clusters.classification import PIP, as_partition, partitions_of_12
from apps.clusters.services.clusters import pip
from apps.isomers.services.generator import canonical_spirals, is_fullerene_order
from apps.planarcode.services.codec import write_planar_code
from apps.spirals.services.spiral import SpiralCode, wind_from_spiral

logger = logging.getLogger(__name__)

TABLE_FORMAT = 1
MAX_SEED_CLUSTER = 5
SHAPE_NOTE = (
    "Seeds match cluster sizes only. With the representative cluster shapes, "
    "a 5-cluster plus seven isolated pentagons first occurs at 100 vertices."
)


@dataclass(frozen=True)
class SeedEntry:
    partition: PIP
    spiral: SpiralCode

    @property
    def checksum(self) -> str:
        return hashlib.sha256(str(self.spiral).encode('utf-8')).hexdigest()

    def as_dict(self) -> dict:
        return {
            'pip': list(self.partition),
            'n': self.spiral.n,
            'spiral': str(self.spiral),
            'sha256': self.checksum,
        }


def seed_partitions() -> List[PIP]:
    """Every partition of 12 the table must cover."""
    return list(partitions_of_12(MAX_SEED_CLUSTER))


def _seed_partition(parts: Iterable[int]) -> PIP:
    partition = as_partition(parts)
    if partition[0] > MAX_SEED_CLUSTER:
        raise PartitionError(
            f"Seeds exist for clusters of at most {MAX_SEED_CLUSTER} pentagons, got {partition}",
            code='out_of_range',
        )
    return partition


def _entry_from_row(row: dict) -> SeedEntry:
    try:
        entry = SeedEntry(as_partition(row['pip']), SpiralCode.parse(row['spiral']))
    except (KeyError, TypeError, PartitionError, SpiralError) as exc:
        raise SeedTableError(f"Malformed seed row {row!r}: {exc}") from exc
    if entry.checksum != row.get('sha256'):
        raise SeedTableError(f"Checksum mismatch for seed {entry.spiral}")
    try:
        F = wind_from_spiral(entry.spiral)
    except SpiralError as exc:
        raise SeedTableError(f"Seed {entry.spiral} does not wind: {exc}") from exc
    if pip(F) != entry.partition:
        raise SeedTableError(f"Seed {entry.spiral} has PIP {pip(F)}, listed as {entry.partition}")
    return entry


@lru_cache(maxsize=4)
def load_seed_table(path: Optional[str] = None) -> Dict[PIP, SeedEntry]:
    path = Path(path or settings.SEED_TABLE_PATH)
    try:
        manifest = json.loads(path.read_text(encoding='utf-8'))
    except (OSError, ValueError) as exc:
        raise SeedTableError(f"Cannot read seed table {path}: {exc}") from exc
    if manifest.get('format') != TABLE_FORMAT:
        raise SeedTableError(f"Unsupported seed table format {manifest.get('format')!r}")
    planar_code = manifest.get('planar_code')
    if planar_code:
        _check_planar_code(path.parent / planar_code['file'], planar_code['sha256'])
    table = {}
    for row in manifest.get('seeds', []):
        entry = _entry_from_row(row)
        table[entry.partition] = entry
    logger.info(f"Loaded {len(table)} seeds from {path}")
    return table


def _check_planar_code(path: Path, checksum: str) -> None:
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise SeedTableError(f"Seed planar_code file {path} is missing") from exc
    if hashlib.sha256(data).hexdigest() != checksum:
        raise SeedTableError(f"Checksum mismatch for {path}")


def search_seed(partition: Sequence[int], n_max: Optional[int] = None, jobs: int = 1) -> Optional[SeedEntry]:
    """Smallest isomer (by n, then spiral) with the given PIP, up to ``n_max``."""
    partition = as_partition(partition)
    n_max = n_max or settings.SEED_SEARCH_N_MAX
    for n in range(20, n_max + 1, 2):
        if not is_fullerene_order(n):
            continue
        for code in canonical_spirals(n, jobs):
            if pip(wind_from_spiral(code)) == partition:
                logger.info(f"Seed for {partition} found at C{n}")
                return SeedEntry(partition, code)
    logger.warning(f"No seed for {partition} up to C{n_max}")
    return None


def seed_fullerene_for_partition(
    partition: Sequence[int], path: Optional[str] = None, search: bool = False
) -> FullereneGraph:
    partition = _seed_partition(partition)
    entry = load_seed_table(path).get(partition)
    if entry is None and search:
        entry = search_seed(partition)
    if entry is None:
        raise SeedTableError(f"No seed fullerene for PIP {partition}; rebuild the table with build-seeds")
    return wind_from_spiral(entry.spiral)


def build_seed_table(
    partitions: Optional[Iterable[Sequence[int]]] = None,
    n_max: Optional[int] = None, path: Optional[str] = None, jobs: int = 1
) -> dict:
    """Search a seed for every partition and write the manifest plus a planar_code file.

    ``partitions`` defaults to :func:`seed_partitions`. Nothing is written
    unless every partition gets a seed.
    """
    path = Path(path or settings.SEED_TABLE_PATH)
    if partitions is None:
        partitions = seed_partitions()
    entries: List[SeedEntry] = []
    for parts in partitions:
        entry = search_seed(_seed_partition(parts), n_max=n_max, jobs=jobs)
        if entry is None:
            raise SeedTableError(f"No seed for {tuple(parts)} up to C{n_max or settings.SEED_SEARCH_N_MAX}")
        entries.append(entry)
    data = write_planar_code(wind_from_spiral(e.spiral).graph for e in entries)
    code_path = path.with_suffix('.pc')
    code_path.write_bytes(data)
    manifest = {
        'format': TABLE_FORMAT,
        'note': SHAPE_NOTE,
        'planar_code': {'file': code_path.name, 'sha256': hashlib.sha256(data).hexdigest()},
        'seeds': [entry.as_dict() for entry in entries],
    }
    path.write_text(json.dumps(manifest, indent=2) + '\n', encoding='utf-8')
    load_seed_table.cache_clear()
    logger.info(f"Wrote {len(entries)} seeds to {path}")
    return manifest
