import logging
from typing import Optional

from django.conf import settings

from apps.core.graph import FullereneGraph
from apps.clusters.services.clusters import pentagon_adjacencies, pip, separation_number
from apps.planarcode.services.records import AnalysisRecord
from apps.spirals.services.numbering import format_spiral_id, spiral_id
from apps.symmetry.services.point_group import point_group

logger = logging.getLogger(__name__)


def analyze_fullerene(F: FullereneGraph, sid: Optional[str] = None) -> AnalysisRecord:
    """PIP, separation number, point group and spiral id of one fullerene.

    ``sid`` skips the spiral lookup when the caller already knows the rank.
    Above ``SPIRAL_ENUMERATION_N_MAX`` no id is computed.
    """
    if sid is None and F.n <= settings.SPIRAL_ENUMERATION_N_MAX:
        sid = format_spiral_id(*spiral_id(F))
    return AnalysisRecord(
        n=F.n,
        pip=pip(F),
        group=point_group(F).name,
        spiral_id=sid,
        separation=separation_number(F),
        pentagon_adjacencies=pentagon_adjacencies(F),
    )
