"""Census of isomers by pentagonal incidence partition.

A census walks every C_n isomer for the requested n, computes its PIP and keeps
those matching the filter, with spiral id, point group, separation number and
pentagon adjacency count. Rows come out grouped per PIP in spiral-id order, so
they can be diffed against the recorded isomer lists.
"""
import logging
import sys
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Collection, Dict, Iterable, Iterator, List, Optional, Tuple

from tqdm import tqdm

from apps.core.exceptions import PentaclusterError
from apps.clusters.classification import PIP, compare_with_reference
from apps.clusters.services.clusters import pentagon_adjacencies, pip
from apps.isomers.services.analysis import analyze_fullerene
from apps.isomers.services.generator import canonical_spirals, is_fullerene_order
from apps.patches.services.bounds import max_vertices_with_big_cluster
from apps.planarcode.services.records import AnalysisRecord
from apps.spirals.services.numbering import format_spiral_id
from apps.spirals.services.spiral import SpiralCode, wind_from_spiral

logger = logging.getLogger(__name__)

BIG_CLUSTER = 7


@dataclass
class CensusEntry:
    rank: int
    record: AnalysisRecord
    spiral_text: str = ''
    minimal_adjacency: bool = False

    @property
    def spiral_id(self) -> str:
        return self.record.spiral_id

    @property
    def group(self) -> str:
        return self.record.group


@dataclass
class CensusTable:
    rows: Dict[PIP, List[CensusEntry]] = field(default_factory=dict)
    candidates: int = 0
    # fewest pentagon adjacencies over all isomers of each n
    min_adjacencies: Dict[int, int] = field(default_factory=dict)

    @property
    def isomer_count(self) -> int:
        return sum(len(entries) for entries in self.rows.values())

    def partitions(self) -> List[PIP]:
        return sorted(self.rows, reverse=True)

    def groups(self, partition: PIP) -> Dict[str, List[str]]:
        found: Dict[str, List[str]] = defaultdict(list)
        for entry in self.rows.get(partition, []):
            found[entry.group].append(entry.spiral_id)
        return dict(found)

    def compare(self, partition: PIP) -> Dict[str, List[str]]:
        return compare_with_reference(partition, self.groups(partition))

    def records(self) -> List[AnalysisRecord]:
        result = []
        for partition in self.partitions():
            result.extend(entry.record for entry in self.rows[partition])
        return result


def pip_filter(
    pips: Optional[Collection[PIP]] = None, min_cluster: Optional[int] = None
) -> Callable[[PIP], bool]:
    wanted = {tuple(p) for p in pips} if pips else None

    def accepts(partition: PIP) -> bool:
        if wanted is not None and partition not in wanted:
            return False
        return min_cluster is None or partition[0] >= min_cluster

    return accepts


def census(
    n_values: Iterable[int],
    pips: Optional[Collection[PIP]] = None,
    min_cluster: Optional[int] = None,
    jobs: int = 1,
    progress: bool = True,
    on_entry: Optional[Callable[[CensusEntry], None]] = None,
    spirals: Callable[[int, int], Iterator[SpiralCode]] = canonical_spirals,
) -> CensusTable:
    """Walk every isomer of each order; ``spirals(n, jobs)`` yields canonical spirals in rank order."""
    accepts = pip_filter(pips, min_cluster)
    table = CensusTable()
    matched: List[Tuple[int, CensusEntry]] = []
    n_values = [n for n in n_values if is_fullerene_order(n)]
    logger.info(f"Census started for n in {n_values[:1]}..{n_values[-1:]}")
    bar = tqdm(total=None, unit='isomer', file=sys.stderr, disable=not progress)
    try:
        for n in n_values:
            bar.set_description(f'C{n}')
            for rank, code in enumerate(spirals(n, jobs), start=1):
                F = wind_from_spiral(code)
                table.candidates += 1
                bar.update(1)
                adjacencies = pentagon_adjacencies(F)
                if n not in table.min_adjacencies or adjacencies < table.min_adjacencies[n]:
                    table.min_adjacencies[n] = adjacencies
                partition = pip(F)
                if not accepts(partition):
                    continue
                _check_big_cluster(n, partition)
                record = analyze_fullerene(F, sid=format_spiral_id(n, rank))
                entry = CensusEntry(rank, record, spiral_text=str(code))
                table.rows.setdefault(partition, []).append(entry)
                matched.append((n, entry))
                if on_entry is not None:
                    on_entry(entry)
    finally:
        bar.close()
    for n, entry in matched:
        entry.minimal_adjacency = entry.record.pentagon_adjacencies == table.min_adjacencies[n]
    logger.info(f"Census finished: {table.isomer_count} of {table.candidates} isomers matched")
    return table


def _check_big_cluster(n: int, partition: PIP) -> None:
    if partition[0] >= BIG_CLUSTER and n > max_vertices_with_big_cluster():
        logger.error(f"C{n} has a cluster of {partition[0]} pentagons")
        raise PentaclusterError(
            f"Found a {partition[0]}-cluster at n = {n} > {max_vertices_with_big_cluster()}"
        )
