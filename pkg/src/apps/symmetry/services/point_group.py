"""Point-group names for fullerene automorphism groups."""
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from apps.core.exceptions import SymmetryError
from apps.core.graph import FullereneGraph
from apps.symmetry.services.automorphisms import (
    AutomorphismGroup,
    automorphisms,
    fixed_sites,
)

logger = logging.getLogger(__name__)

# the 28 point groups a fullerene can have, with their orders
GROUP_ORDERS: Dict[str, int] = {
    'C1': 1, 'C2': 2, 'C3': 3, 'Ci': 2, 'Cs': 2, 'S4': 4, 'S6': 6,
    'C2v': 4, 'C2h': 4, 'C3v': 6, 'C3h': 6,
    'D2': 4, 'D3': 6, 'D5': 10, 'D6': 12,
    'D2h': 8, 'D2d': 8, 'D3h': 12, 'D3d': 12, 'D5h': 20, 'D5d': 20, 'D6h': 24, 'D6d': 24,
    'T': 12, 'Td': 24, 'Th': 24, 'I': 60, 'Ih': 120,
}
POINT_GROUPS = tuple(GROUP_ORDERS)

# rotation subgroup order -> chiral group, for orders with a single candidate
_CHIRAL_BY_ORDER = {1: 'C1', 2: 'C2', 3: 'C3', 4: 'D2', 6: 'D3', 10: 'D5', 60: 'I'}
# chiral group -> (with inversion, without inversion)
_ACHIRAL_BY_INVERSION = {
    'I': ('Ih', 'Ih'),
    'T': ('Th', 'Td'),
    'D6': ('D6h', 'D6d'),
    'D5': ('D5d', 'D5h'),
    'D3': ('D3d', 'D3h'),
    'D2': ('D2h', 'D2d'),
}


@dataclass(frozen=True)
class PointGroup:
    name: str
    order: int
    rotation_order: int
    axes: Tuple[Tuple[int, int], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.name not in GROUP_ORDERS:
            raise SymmetryError(f"Unknown point group {self.name!r}")
        if GROUP_ORDERS[self.name] != self.order:
            raise SymmetryError(
                f"Point group {self.name} has order {GROUP_ORDERS[self.name]}, not {self.order}"
            )

    @property
    def is_chiral(self) -> bool:
        return self.order == self.rotation_order

    def __str__(self) -> str:
        return self.name


def rotation_axes(F: FullereneGraph, group: Optional[AutomorphismGroup] = None) -> Counter:
    """Number of rotation axes of each order.

    Every proper rotation other than the identity fixes exactly two sites, the
    two ends of its axis. Rotations sharing the fixed pair share the axis, and
    the axis order is the largest element order found on it.
    """
    group = group or automorphisms(F)
    by_axis: Dict[FrozenSet[tuple], int] = defaultdict(int)
    for g in group.rotations:
        if g.is_identity:
            continue
        sites = fixed_sites(F, g).as_set()
        if len(sites) != 2:
            raise SymmetryError(f"Rotation of order {g.order} fixes {len(sites)} sites")
        by_axis[sites] = max(by_axis[sites], g.order)
    return Counter(by_axis.values())


def _chiral_name(rotation_order: int, axes: Counter) -> str:
    top = max(axes) if axes else 1
    if rotation_order == 12:
        return 'T' if top == 3 else 'D6'
    name = _CHIRAL_BY_ORDER.get(rotation_order)
    if name is None:
        raise SymmetryError(f"No fullerene point group has {rotation_order} rotations")
    # D2 and D3 are the only candidates: fullerenes have no C4 or C6 axis alone
    expected_top = {'D2': 2, 'D3': 3, 'D5': 5, 'I': 5}.get(name)
    if expected_top is not None and top != expected_top:
        raise SymmetryError(f"Rotation group of order {rotation_order} with a {top}-fold axis")
    return name


def point_group(F: FullereneGraph) -> PointGroup:
    group = automorphisms(F)
    axes = rotation_axes(F, group)
    name = _chiral_name(group.rotation_order, axes)
    improper = group.improper
    if improper:
        if group.order != 2 * group.rotation_order:
            raise SymmetryError(f"Group of order {group.order} has {group.rotation_order} rotations")
        involutions = [g for g in improper if g.order == 2]
        mirrors = sum(1 for g in involutions if fixed_sites(F, g).count)
        inversion = len(involutions) > mirrors
        if name in _ACHIRAL_BY_INVERSION:
            name = _ACHIRAL_BY_INVERSION[name][0 if inversion else 1]
        elif name == 'C3':
            name = 'S6' if inversion else ('C3v' if mirrors == 3 else 'C3h')
        elif name == 'C2':
            if inversion:
                name = 'C2h'
            else:
                name = 'C2v' if mirrors == 2 else 'S4'
        else:
            name = 'Ci' if inversion else 'Cs'
    try:
        return PointGroup(name, group.order, group.rotation_order, tuple(sorted(axes.items())))
    except SymmetryError:
        logger.error(f"Point group classification failed for a C{F.n} of order {group.order}")
        raise
