import io

import pytest

from apps.core.exceptions import PentaclusterError
from apps.clusters.classification import partitions_of_12, classify_partition, IMPOSSIBLE
from apps.clusters.services.clusters import pip
from apps.isomers.services import census as census_module
from apps.isomers.services.census import census, pip_filter
from apps.isomers.services.generator import (
    EXTERNAL,
    EnumerationTask,
    canonical_spirals,
    chunk_keys,
    count_isomers,
    enumerate_chunk,
    generate_isomers,
    is_fullerene_order,
)
from apps.planarcode.services.codec import write_planar_code
from apps.spirals.services.spiral import SpiralCode, wind_from_spiral


class TestEnumeration:
    def test_fullerene_orders(self):
        """Test which vertex counts admit a fullerene"""
        assert [n for n in range(18, 32) if is_fullerene_order(n)] == [20, 24, 26, 28, 30]

    def test_isomer_counts(self):
        """Test isomer counts for n up to 34"""
        counts = [count_isomers(n) for n in range(20, 36, 2)]
        assert counts == [1, 0, 1, 1, 2, 3, 6, 6]

    def test_spirals_come_out_sorted(self):
        """Test that spirals are produced in increasing order"""
        positions = [code.positions for code in canonical_spirals(34)]
        assert positions == sorted(positions)
        assert len(set(positions)) == len(positions)

    def test_chunks_partition_the_search(self):
        """Test that the chunks together give the full enumeration"""
        merged = sorted(p for key in chunk_keys(32) for p in enumerate_chunk(32, key))
        assert merged == [code.positions for code in canonical_spirals(32)]

    def test_parallel_output_matches_serial(self):
        """Test that --jobs does not change the output order"""
        assert list(canonical_spirals(32, jobs=2)) == list(canonical_spirals(32))

    def test_filters(self):
        """Test predicate filtering of generated isomers"""
        task = EnumerationTask(n=30, filters=[lambda F: pip(F) == (12,)])
        assert len(list(generate_isomers(task))) == 2

    def test_external_ingestion(self, dodecahedron, c60):
        """Test reading isomers from a planar_code corpus"""
        source = io.BytesIO(write_planar_code([dodecahedron.graph, c60.graph]))
        task = EnumerationTask(n=60, mode=EXTERNAL, source=source)
        found = list(generate_isomers(task))
        assert [F.n for F in found] == [60]

    def test_external_needs_source(self):
        """Test that external mode requires a stream"""
        with pytest.raises(ValueError):
            EnumerationTask(n=60, mode=EXTERNAL)


class TestCensus:
    def test_pip_12_up_to_30(self):
        """Test the single-cluster isomers up to C30 against the recorded list"""
        table = census(range(20, 31), pips=[(12,)], progress=False)
        assert table.isomer_count == 7
        assert [e.spiral_id for e in table.rows[(12,)]] == [
            '20:1', '24:1', '26:1', '28:1', '28:2', '30:2', '30:3',
        ]
        groups = table.groups((12,))
        assert groups['Ih'] == ['20:1']
        assert groups['C2v'] == ['30:2', '30:3']
        assert groups['Td'] == ['28:2']

    def test_candidates_counted(self):
        """Test that every isomer is visited even when filtered out"""
        table = census([28, 30], pips=[(11, 1)], progress=False)
        assert table.candidates == 5
        assert table.isomer_count == 0

    def test_entries_reported_as_found(self):
        """Test the on_entry callback"""
        seen = []
        census([20, 24], progress=False, on_entry=seen.append)
        assert [e.spiral_id for e in seen] == ['20:1', '24:1']
        assert seen[0].spiral_text == '20: 1 2 3 4 5 6 7 8 9 10 11 12'

    def test_minimal_adjacency_flag(self):
        """Test that the sole C20 isomer has the minimum adjacency count"""
        table = census([20], progress=False)
        entry = table.rows[(12,)][0]
        assert entry.record.pentagon_adjacencies == 30
        assert entry.minimal_adjacency

    def test_pip_filter(self):
        """Test PIP and minimum-cluster filters"""
        accepts = pip_filter([(12,), (11, 1)], min_cluster=12)
        assert accepts((12,))
        assert not accepts((11, 1))
        assert pip_filter()((1,) * 12)

    def test_big_cluster_guard(self, monkeypatch):
        """Test that a big cluster past the vertex bound aborts the census"""
        monkeypatch.setattr(census_module, 'max_vertices_with_big_cluster', lambda: 20)
        with pytest.raises(PentaclusterError):
            census([24], min_cluster=7, progress=False)


@pytest.mark.slow
class TestReferenceCensus:
    def test_pip_12_up_to_48(self):
        """Test the 41 single-cluster fullerenes and their point groups"""
        table = census(range(20, 49), pips=[(12,)], progress=False, jobs=4)
        assert table.isomer_count == 41
        assert table.compare((12,)) == {'missing': [], 'unexpected': [], 'regrouped': []}

    def test_large_finite_rows(self):
        """Test the finite rows with a cluster of 9 to 11 pentagons"""
        pips = [(11, 1), (10, 2), (10, 1, 1), (9, 3), (7, 3, 2)]
        table = census(range(20, 49), pips=pips, progress=False, jobs=4)
        for partition in pips:
            assert table.compare(partition) == {'missing': [], 'unexpected': [], 'regrouped': []}

    def test_pip_8_4_up_to_52(self):
        """Test the 16 fullerenes with PIP (8,4)"""
        table = census(range(20, 53), pips=[(8, 4)], progress=False, jobs=4)
        assert table.isomer_count == 16
        assert table.compare((8, 4)) == {'missing': [], 'unexpected': [], 'regrouped': []}

    def test_impossible_partitions_never_occur(self):
        """Test that no PIP classified impossible shows up up to C52"""
        impossible = [p for p in partitions_of_12() if classify_partition(p).label == IMPOSSIBLE]
        table = census(range(20, 53), pips=impossible, progress=False, jobs=4)
        assert table.isomer_count == 0

    def test_pip_7_5_up_to_64(self):
        """Test the 69 fullerenes with PIP (7,5)"""
        table = census(range(20, 65), pips=[(7, 5)], progress=False, jobs=4)
        assert table.isomer_count == 69
        groups = table.groups((7, 5))
        assert len(groups['C1']) == 52
        assert len(groups['Cs']) == 17

    def test_winding_matches_ids(self):
        """Test that the census ranks agree with the spiral numbering"""
        table = census([40], pips=[(10, 1, 1)], progress=False)
        entry = table.rows[(10, 1, 1)][0]
        assert entry.spiral_id == '40:39'
        assert pip(wind_from_spiral(SpiralCode.parse(entry.spiral_text))) == (10, 1, 1)
