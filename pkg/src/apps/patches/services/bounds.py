"""Boundary-length bounds for patches with at most five pentagons.

All square roots are handled in integers: a bound ``2*ceil(sqrt(X))`` is the
smallest even number whose square reaches ``4X``, and a bound
``2*ceil(sqrt(A/4) + 1/2) - 1`` is the smallest odd ``s`` with ``s*s >= A``.
"""
import logging
from math import isqrt
from typing import Dict

from apps.core.exceptions import PatchError

logger = logging.getLogger(__name__)

# largest hexagon count of a fullerene with a pentagon cluster of size k
PUBLISHED_HEXAGON_BOUNDS: Dict[int, int] = {7: 52, 8: 36, 9: 31, 10: 30, 11: 30, 12: 30}

FORMULA_NOTE = (
    "p = 2 uses 2*ceil(sqrt(8h + 16)): two fused pentagons give 8 and a cluster "
    "of 10 leaves room for at most 30 hexagons"
)

# p -> (coefficient, constant) of the expression under the root
_EVEN_CASES = {0: (12, -3), 2: (8, 16), 4: (4, 25)}
_ODD_CASES = {1: (40, 25), 3: (24, 81), 5: (8, 113)}


def _ceil_sqrt(x: int) -> int:
    if x <= 0:
        return 0
    return isqrt(x - 1) + 1


def _least_odd_root(a: int) -> int:
    s = isqrt(a)
    if s * s < a:
        s += 1
    return s if s % 2 else s + 1


def min_boundary_length(p: int, h: int) -> int:
    """Smallest possible boundary length of a patch with ``p`` pentagons and ``h`` hexagons."""
    if not 0 <= p <= 5:
        raise PatchError(f"Boundary bound needs 0 <= p <= 5, got p = {p}", code='pentagon_budget')
    if h < 0 or (p, h) == (0, 0):
        raise PatchError(f"No patch with p = {p}, h = {h}", code='structure')
    if p in _EVEN_CASES:
        coefficient, constant = _EVEN_CASES[p]
        return 2 * _ceil_sqrt(coefficient * h + constant)
    coefficient, constant = _ODD_CASES[p]
    return _least_odd_root(coefficient * h + constant)


def max_hexagons_in_patch(p: int, b: int) -> int:
    """Largest ``h`` whose minimum boundary length is at most ``b``; 0 if none."""
    if not 0 <= p <= 5:
        raise PatchError(f"Hexagon bound needs 0 <= p <= 5, got p = {p}", code='pentagon_budget')
    h = 0 if p else 1
    if min_boundary_length(p, h) > b:
        return 0
    while min_boundary_length(p, h + 1) <= b:
        h += 1
    return h


def boundary_budget(k: int) -> int:
    """Total complement boundary available around a cluster of ``k`` pentagons."""
    return 5 * k - 2 * (k - 1)


def max_hexagons_with_cluster(k: int) -> int:
    if not 7 <= k <= 12:
        raise PatchError(f"Cluster size must lie in 7..12, got {k}", code='pentagon_budget')
    hexagons = max_hexagons_in_patch(12 - k, boundary_budget(k))
    if hexagons != PUBLISHED_HEXAGON_BOUNDS[k]:
        logger.error(f"Hexagon bound for k = {k} computed as {hexagons}")
        raise PatchError(
            f"Computed hexagon bound {hexagons} for k = {k} differs from the "
            f"published {PUBLISHED_HEXAGON_BOUNDS[k]}",
            code='published_bound',
        )
    return hexagons


def max_vertices_with_cluster(k: int) -> int:
    faces = 12 + max_hexagons_with_cluster(k)
    return 2 * (faces - 2)


def max_vertices_with_big_cluster() -> int:
    """Vertex bound for fullerenes with a pentagon cluster of 7 or more."""
    return max(max_vertices_with_cluster(k) for k in range(7, 13))
