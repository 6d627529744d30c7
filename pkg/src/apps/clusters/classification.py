"""Classification of the partitions of 12 as pentagonal incidence partitions.

Classes:
    a  no fullerene has the partition
    b  finitely many fullerenes have it (the count is recorded)
    c  infinitely many, with bounded separation number
    d  infinitely many, with unbounded separation number

Every partition whose largest part is below 6 is class d. The rows with a
part of 6 or more are recorded below together with the isomer lists of the
finite classes, grouped by point group and given as ``n:rank`` spiral ids.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from apps.core.exceptions import PartitionError

IMPOSSIBLE = 'a'
FINITE = 'b'
BOUNDED = 'c'
UNBOUNDED = 'd'

CLASS_LABELS = {
    IMPOSSIBLE: 'impossible',
    FINITE: 'finite',
    BOUNDED: 'infinite, bounded separation',
    UNBOUNDED: 'infinite, unbounded separation',
}

PIP = Tuple[int, ...]

FINITE_PARTITION_ISOMERS: Dict[PIP, Dict[str, Tuple[str, ...]]] = {
    (12,): {
        'C1': ('36:7', '38:7', '38:11', '38:14', '40:34', '42:37'),
        'C2': (
            '32:1', '32:4', '34:1', '34:4', '34:5', '36:10', '36:11', '36:12', '38:17',
            '40:11', '40:23', '40:35', '40:36', '42:38', '42:43', '44:66', '44:81', '46:113',
        ),
        'Cs': ('34:3',),
        'D2': ('28:1', '36:5', '44:85'),
        'C2v': ('30:2', '30:3', '38:12'),
        'D3': ('32:6',),
        'C3v': ('34:6',),
        'D2d': ('36:14',),
        'D3h': ('26:1', '32:5'),
        'D3d': ('44:86',),
        'D6d': ('24:1', '48:186'),
        'Td': ('28:2',),
        'Ih': ('20:1',),
    },
    (11, 1): {'Cs': ('40:28', '42:42')},
    (10, 2): {'C2v': ('40:37',)},
    (10, 1, 1): {'D5d': ('40:39',)},
    (9, 3): {'Cs': ('44:71',), 'C3v': ('38:16',)},
    (8, 4): {
        'C1': ('38:8', '42:15', '42:36', '46:58', '48:60', '48:86'),
        'C2': ('40:15', '40:18', '44:76', '48:46', '48:63', '48:170', '52:83'),
        'Cs': ('46:28', '46:57'),
        'C2v': ('36:9',),
    },
    (7, 5): {
        'C1': (
            '36:3', '38:3', '38:4', '38:5', '40:4', '40:6', '40:12', '40:26', '42:2', '42:4',
            '42:10', '42:25', '42:29', '42:30', '42:44', '44:9', '44:10', '44:18', '44:41',
            '44:42', '44:48', '46:6', '46:15', '46:17', '46:45', '46:71', '46:105', '48:10',
            '48:20', '48:181', '48:182', '50:10', '50:12', '50:139', '50:140', '50:141',
            '50:142', '50:232', '50:235', '52:9', '52:117', '52:118', '52:183', '52:196',
            '54:32', '54:33', '54:134', '56:58', '56:295', '58:17', '58:18', '60:30',
        ),
        'Cs': (
            '34:2', '36:4', '36:8', '40:7', '40:13', '40:24', '42:12', '44:11', '44:84',
            '46:8', '48:75', '50:33', '54:19', '54:474', '58:240', '60:90', '64:53',
        ),
    },
    (7, 4, 1): {
        'C1': ('44:51', '46:27', '46:29', '46:30', '46:59', '48:106', '50:50', '52:166'),
        'Cs': ('44:28', '44:54', '46:41', '54:101'),
    },
    (7, 3, 2): {'Cs': ('48:141',)},
}

# isomers with the fewest pentagon adjacencies among all isomers of their n
MINIMAL_ADJACENCY_IDS = frozenset(
    {'20:1', '24:1', '26:1', '28:2', '30:3', '32:6', '34:5', '36:14', '38:17', '40:39'}
)

# rows of the table with a part of at least 6
_LARGE_PART_CLASSES: Dict[PIP, str] = {
    (9, 2, 1): IMPOSSIBLE,
    (9, 1, 1, 1): IMPOSSIBLE,
    (8, 3, 1): IMPOSSIBLE,
    (8, 2, 2): IMPOSSIBLE,
    (8, 2, 1, 1): IMPOSSIBLE,
    (8, 1, 1, 1, 1): IMPOSSIBLE,
    (7, 3, 1, 1): IMPOSSIBLE,
    (7, 2, 2, 1): IMPOSSIBLE,
    (7, 2, 1, 1, 1): IMPOSSIBLE,
    (7, 1, 1, 1, 1, 1): IMPOSSIBLE,
    (6, 6): UNBOUNDED,
    (6, 5, 1): BOUNDED,
    (6, 4, 2): BOUNDED,
    (6, 4, 1, 1): BOUNDED,
    (6, 3, 3): BOUNDED,
    (6, 3, 2, 1): BOUNDED,
    (6, 3, 1, 1, 1): IMPOSSIBLE,
    (6, 2, 2, 2): IMPOSSIBLE,
    (6, 2, 2, 1, 1): IMPOSSIBLE,
    (6, 2, 1, 1, 1, 1): IMPOSSIBLE,
    (6, 1, 1, 1, 1, 1, 1): IMPOSSIBLE,
}
_LARGE_PART_CLASSES.update({pip: FINITE for pip in FINITE_PARTITION_ISOMERS})


@dataclass(frozen=True)
class PartitionClass:
    partition: PIP
    label: str
    count: Optional[int] = None

    def __post_init__(self):
        if (self.label == FINITE) != (self.count is not None):
            raise PartitionError("A count is recorded exactly for finite partitions", code='out_of_range')

    def describe(self) -> str:
        text = f'{CLASS_LABELS[self.label]} ({self.label})'
        if self.count is not None:
            text += f', {self.count} fullerenes'
        return text


def as_partition(parts: Iterable[int]) -> PIP:
    """Validate and sort a partition of 12 into non-increasing order."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if not parts or parts[-1] < 1 or sum(parts) != 12:
        raise PartitionError(f"{parts} is not a partition of 12", code='not_partition')
    return parts


def parse_partition(text: str) -> PIP:
    try:
        return as_partition(int(t) for t in text.replace(',', ' ').split())
    except ValueError as exc:
        raise PartitionError(f"Malformed partition {text!r}", code='not_partition') from exc


def partitions_of_12(largest: int = 12) -> Iterator[PIP]:
    """All partitions of 12, in reverse lexicographic order."""

    def _parts(total: int, cap: int) -> Iterator[PIP]:
        if total == 0:
            yield ()
            return
        for first in range(min(total, cap), 0, -1):
            for rest in _parts(total - first, first):
                yield (first,) + rest

    return _parts(12, largest)


def reference_isomers(partition: Sequence[int]) -> Dict[str, Tuple[str, ...]]:
    return FINITE_PARTITION_ISOMERS.get(as_partition(partition), {})


def classify_partition(partition: Sequence[int]) -> PartitionClass:
    pip = as_partition(partition)
    if pip[0] < 6:
        return PartitionClass(pip, UNBOUNDED)
    label = _LARGE_PART_CLASSES[pip]
    count = None
    if label == FINITE:
        count = sum(len(ids) for ids in FINITE_PARTITION_ISOMERS[pip].values())
    return PartitionClass(pip, label, count)


def class_summary() -> Dict[str, Counter]:
    """Class counts for partitions with largest part at least 6 and below 6."""
    summary = {'large': Counter(), 'small': Counter()}
    for pip in partitions_of_12():
        bucket = 'large' if pip[0] >= 6 else 'small'
        summary[bucket][classify_partition(pip).label] += 1
    return summary


def compare_with_reference(
    partition: Sequence[int], found: Dict[str, Iterable[str]]
) -> Dict[str, List[str]]:
    """Diff measured ``group -> ids`` against the recorded row.

    Returns ``missing`` (recorded, not found), ``unexpected`` (found, not
    recorded) and ``regrouped`` (found under another point group).
    """
    expected = {
        sid: group for group, ids in reference_isomers(partition).items() for sid in ids
    }
    measured = {sid: group for group, ids in found.items() for sid in ids}
    return {
        'missing': sorted(set(expected) - set(measured), key=_id_key),
        'unexpected': sorted(set(measured) - set(expected), key=_id_key),
        'regrouped': sorted(
            (sid for sid in set(expected) & set(measured) if expected[sid] != measured[sid]),
            key=_id_key,
        ),
    }


def _id_key(sid: str) -> Tuple[int, int]:
    n, _, rank = sid.partition(':')
    return int(n), int(rank)
