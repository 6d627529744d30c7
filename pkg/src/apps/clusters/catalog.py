"""The eighteen closed clusters of six pentagons.

Seventeen are pentagon-only patches and come from exhaustive patch
enumeration; the eighteenth is the ring of six pentagons closed by its
central hexagon. Entries are labelled ``a`` to ``r`` ordered by tube
parameters in the order of ``LABEL_ORDER`` and then by shape code.
"""
import logging
import string
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List

from apps.core.exceptions import InvalidGraphError, PentaclusterError
from apps.core.graph import FullereneGraph
from apps.clusters.services.clusters import PentagonCluster
from apps.clusters.services.signature import (
    T6,
    T6_MULTIPLICITY,
    ClusterSignature,
    TubeParams,
    cluster_signature,
    signature_of_patch,
    tube_parameters_from_boundary,
)
from apps.patches.services.enumeration import enumerate_patches
from apps.patches.services.patch import Patch, PatchBuilder

logger = logging.getLogger(__name__)

LABEL_ORDER = T6
CATALOG_SIZE = 18


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    signature: ClusterSignature
    tube: TubeParams
    patch: Patch

    @property
    def has_hexagon(self) -> bool:
        return self.patch.h > 0


def pentagon_ring_patch() -> Patch:
    """Six pentagons around a hexagon, the hexagon included."""
    builder = PatchBuilder.single_face(6)
    builder.attach_face(0, 1, 5)
    for k in range(1, 5):
        builder.attach_face(builder.boundary.index(k) - 1, 2, 5)
    builder.attach_face(builder.boundary.index(5) - 1, 3, 5)
    return builder.freeze()


@lru_cache(maxsize=1)
def six_cluster_catalog() -> List[CatalogEntry]:
    patches = enumerate_patches(6, 0) + [pentagon_ring_patch()]
    rows = []
    for patch in patches:
        tube = tube_parameters_from_boundary(patch)
        key = (tube.l, tube.m)
        order = LABEL_ORDER.index(key) if key in LABEL_ORDER else len(LABEL_ORDER)
        rows.append((order, patch.code(), tube, patch))
    rows.sort(key=lambda row: (row[0], row[1]))
    catalog = [
        CatalogEntry(string.ascii_lowercase[i], signature_of_patch(patch), tube, patch)
        for i, (_, _, tube, patch) in enumerate(rows)
    ]
    verify_catalog(catalog)
    return catalog


def verify_catalog(catalog: List[CatalogEntry]) -> None:
    if len(catalog) != CATALOG_SIZE:
        raise PentaclusterError(f"Six-pentagon catalog has {len(catalog)} entries, expected {CATALOG_SIZE}")
    if len({entry.signature for entry in catalog}) != CATALOG_SIZE:
        raise PentaclusterError("Six-pentagon catalog signatures are not distinct")
    counts: Dict[tuple, int] = {}
    for entry in catalog:
        key = (entry.tube.l, entry.tube.m)
        counts[key] = counts.get(key, 0) + 1
    if counts != T6_MULTIPLICITY:
        raise PentaclusterError(f"Tube parameter multiplicities {counts} do not match the catalog")


def catalog_entry(sig: ClusterSignature) -> CatalogEntry:
    for entry in six_cluster_catalog():
        if entry.signature == sig:
            return entry
    raise InvalidGraphError("Signature is not a six-pentagon cluster", code='cluster')


def tube_parameters_of_6_cluster(sig: ClusterSignature) -> TubeParams:
    return catalog_entry(sig).tube


def classify_six_cluster(F: FullereneGraph, C: PentagonCluster) -> CatalogEntry:
    if C.size != 6:
        raise InvalidGraphError(f"Cluster has {C.size} pentagons, expected 6", code='cluster')
    return catalog_entry(cluster_signature(F, C))
