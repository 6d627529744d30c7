"""Analysis records: one line per fullerene in TSV or JSON-lines form."""
import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

from apps.core.exceptions import PartitionError

HOG_PREFIX = 'pentagon_cluster_'
FIELDS = ('n', 'spiral_id', 'pip', 'separation', 'group', 'hog_keyword')
FORMATS = ('tsv', 'json')


def format_pip(parts: Sequence[int]) -> str:
    return ','.join(str(p) for p in parts)


def hog_keyword(parts: Sequence[int]) -> str:
    """House of Graphs keyword, e.g. ``pentagon_cluster_9_3``."""
    ordered = sorted(parts, reverse=True)
    return HOG_PREFIX + '_'.join(str(p) for p in ordered)


def pip_from_hog_keyword(keyword: str) -> Tuple[int, ...]:
    if not keyword.startswith(HOG_PREFIX):
        raise PartitionError(f"Not a pentagon cluster keyword: {keyword!r}", code='not_partition')
    try:
        parts = tuple(int(token) for token in keyword[len(HOG_PREFIX):].split('_'))
    except ValueError as exc:
        raise PartitionError(f"Malformed keyword {keyword!r}", code='not_partition') from exc
    if sum(parts) != 12 or any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise PartitionError(f"{keyword!r} does not name a partition of 12", code='not_partition')
    return parts


@dataclass
class AnalysisRecord:
    n: int
    pip: Tuple[int, ...]
    group: str
    spiral_id: Optional[str] = None
    separation: Optional[int] = None
    pentagon_adjacencies: Optional[int] = field(default=None, compare=False)

    @property
    def hog_keyword(self) -> str:
        return hog_keyword(self.pip)

    def as_row(self) -> dict:
        return {
            'n': self.n,
            'spiral_id': self.spiral_id if self.spiral_id is not None else '-',
            'pip': format_pip(self.pip),
            'separation': self.separation if self.separation is not None else '-',
            'group': self.group,
            'hog_keyword': self.hog_keyword,
        }

    def as_dict(self) -> dict:
        data = asdict(self)
        data['pip'] = list(self.pip)
        data['hog_keyword'] = self.hog_keyword
        return data


def write_analysis_records(records: Iterable[AnalysisRecord], fmt: str = 'tsv') -> bytes:
    """Serialize ``records``; field order is fixed by ``FIELDS``."""
    if fmt not in FORMATS:
        raise ValueError(f"Unknown record format {fmt!r}")
    buffer = io.StringIO()
    if fmt == 'tsv':
        writer = csv.DictWriter(
            buffer, fieldnames=FIELDS, delimiter='\t', lineterminator='\n'
        )
        for record in records:
            writer.writerow(record.as_row())
    else:
        for record in records:
            row = record.as_row()
            buffer.write(json.dumps({key: row[key] for key in FIELDS}) + '\n')
    return buffer.getvalue().encode('utf-8')
