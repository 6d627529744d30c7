import io

import pytest
from django.core.cache import cache

from apps.core.cli import run
from apps.goldberg.services.tubes import tube_rings
from apps.spirals.services.spiral import SpiralCode, wind_from_spiral
from apps.isomers.models import CensusRun

C60_SPIRAL = SpiralCode(60, (1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32))


@pytest.fixture(autouse=True)
def clear_cache():
    cache.clear()
    yield
    cache.clear()


@pytest.fixture
def dodecahedron():
    """C20: twelve pentagons in a single cluster"""
    return wind_from_spiral(SpiralCode(20, tuple(range(1, 13))))


@pytest.fixture
def c60():
    return wind_from_spiral(C60_SPIRAL)


@pytest.fixture
def tube():
    """Factory for the (6,6) tube fullerene with j hexagon rings"""

    def _tube(j):
        F, _ = tube_rings(j)
        return F

    return _tube


@pytest.fixture
def run_cli():
    """Run a CLI command; returns (exit code, stdout, stderr)"""

    def _run(*argv, stdin=None):
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), stdout=out, stderr=err, stdin=stdin)
        return code, out.getvalue(), err.getvalue()

    return _run


@pytest.fixture
def census_run():
    return CensusRun.objects.create(n_min=20, n_max=28, pip_filter='12')


@pytest.fixture
def processing_census_run():
    return CensusRun.objects.create(
        n_min=20,
        n_max=40,
        status=CensusRun.PROCESSING,
        total_orders=10,
        processed_orders=5,
    )


@pytest.fixture
def completed_census_run():
    return CensusRun.objects.create(
        n_min=20,
        n_max=28,
        status=CensusRun.SUCCESS,
        total_orders=4,
        processed_orders=4,
        candidate_count=4,
        isomer_count=2,
    )
