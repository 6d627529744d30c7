import json

import pytest

from apps.core.exceptions import (
    InvalidGraphError,
    PartitionError,
    PatchError,
    ReplacementNotFoundError,
    SeedTableError,
)
from apps.core.graph import face_distance, region_boundary, region_degree_word
from apps.clusters.services.clusters import closed_cluster_faces, pentagon_clusters, pip, separation_number
from apps.goldberg.services import seeds as seeds_module
from apps.goldberg.services.cycles import (
    hexagon_cycle,
    lift_hexagon_cycle,
    separating_cycle_witnesses,
    validate_hexagon_cycle,
)
from apps.goldberg.services.inflation import goldberg_5_0
from apps.goldberg.services.replacement import (
    find_replacement,
    hexagon_completion,
    inflate_preserving_clusters,
    reinstate_cluster,
    splice_region,
)
from apps.goldberg.services.seeds import (
    SeedEntry,
    build_seed_table,
    load_seed_table,
    search_seed,
    seed_fullerene_for_partition,
    seed_partitions,
)
from apps.goldberg.services.tubes import tube_fullerene_6_6, tube_rings, tube_spiral
from apps.isomers.services.generator import canonical_spirals
from apps.patches.services.enumeration import enumerate_patches
from apps.patches.services.patch import Patch
from apps.spirals.services.numbering import isomer_from_id
from apps.spirals.services.spiral import SpiralCode, wind_from_spiral
from apps.symmetry.services.point_group import point_group

C60_SPIRAL = SpiralCode(60, (1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32))


@pytest.fixture(scope='module')
def inflated_dodecahedron():
    F = wind_from_spiral(SpiralCode(20, tuple(range(1, 13))))
    inflated, inflation = goldberg_5_0(F)
    return F, inflated, inflation


class TestGoldbergInflation:
    def test_vertex_count(self, inflated_dodecahedron):
        """Test that the inflation multiplies the vertex count by 25"""
        F, inflated, _ = inflated_dodecahedron
        assert inflated.n == 25 * F.n == 500

    def test_pentagons_isolated(self, inflated_dodecahedron):
        """Test that every pentagon of C20 ends up isolated"""
        _, inflated, _ = inflated_dodecahedron
        assert pip(inflated) == (1,) * 12

    def test_adjacent_pentagons_move_to_distance_5(self, inflated_dodecahedron):
        """Test distances between the images of formerly adjacent pentagons"""
        F, inflated, inflation = inflated_dodecahedron
        for f in F.pentagon_indices:
            for g in F.face_neighbors[f]:
                assert face_distance(inflated, inflation.corner[f], inflation.corner[g]) == 5
        assert separation_number(inflated) == 5

    def test_symmetry_kept(self, inflated_dodecahedron):
        """Test that the point group order does not drop"""
        F, inflated, _ = inflated_dodecahedron
        assert point_group(inflated).order >= point_group(F).order

    def test_parent_map(self, inflated_dodecahedron):
        """Test that every inflated face has a parent and corners map to themselves"""
        F, inflated, inflation = inflated_dodecahedron
        assert len(inflation.parent) == inflated.face_count
        assert all(0 <= p < F.face_count for p in inflation.parent)
        for f in range(F.face_count):
            assert inflation.parent[inflation.corner[f]] == f

    def test_children(self, inflated_dodecahedron):
        """Test strict and closed child sets"""
        F, _, inflation = inflated_dodecahedron
        strict = inflation.strict_children([0])
        plain = inflation.children([0])
        closed = inflation.children([0], closed=True)
        assert strict <= plain <= closed
        assert inflation.corner[0] in strict
        # faces tied between two parents sit on the source edges
        assert set(inflation.shared.values()) <= set(range(F.face_count))

    @pytest.mark.parametrize('rank', [1, 17, 40])
    def test_c40_isomers(self, rank):
        """Test inflation invariants on C40 isomers"""
        F = isomer_from_id(40, rank)
        inflated, inflation = goldberg_5_0(F)
        assert inflated.n == 1000
        assert pip(inflated) == (1,) * 12
        for f in F.pentagon_indices:
            for g in F.face_neighbors[f]:
                if F.is_pentagon(g):
                    assert face_distance(inflated, inflation.corner[f], inflation.corner[g]) == 5
        assert point_group(inflated).order >= point_group(F).order

    def test_c60(self, c60):
        """Test inflating an isolated-pentagon fullerene"""
        inflated, _ = goldberg_5_0(c60)
        assert inflated.n == 1500
        assert separation_number(inflated) == 10


class TestTubes:
    def test_tube_spiral(self):
        """Test the spiral of the one-ring tube"""
        assert tube_spiral(1) == SpiralCode(30, (1, 2, 3, 4, 5, 6, 12, 13, 14, 15, 16, 17))

    def test_tube_needs_a_ring(self):
        """Test that a tube without rings is refused"""
        with pytest.raises(InvalidGraphError):
            tube_spiral(0)

    @pytest.mark.parametrize('j', range(1, 7))
    def test_separation_grows_with_rings(self, tube, j):
        """Test PIP (6,6) with separation j + 1"""
        F = tube(j)
        assert F.n == 20 + 10 * j
        assert pip(F) == (6, 6)
        assert separation_number(F) == j + 1

    def test_tube_fullerene(self):
        """Test the tube built straight from its spiral"""
        F = tube_fullerene_6_6(4)
        assert F.n == 60
        assert pip(F) == (6, 6)

    def test_rings_are_hexagons(self):
        """Test the ring face ids"""
        F, rings = tube_rings(3)
        assert len(rings) == 3
        for ring in rings:
            assert len(ring) == 5
            assert not any(F.is_pentagon(f) for f in ring)


class TestHexagonCycles:
    def test_cycle_separates_caps(self):
        """Test that a cycle between the caps of a tube keeps them apart"""
        F, _ = tube_rings(2)
        C1, C2 = pentagon_clusters(F)
        first = separating_cycle_witnesses(F, C1, C2)[0]
        cycle = hexagon_cycle(F, first.faces, next(iter(C1.faces)))
        assert len(cycle) >= 5
        assert C1.faces <= cycle.inside
        assert not C2.faces & cycle.inside

    def test_pentagon_in_cycle(self, tube):
        """Test that a cycle through a pentagon is rejected"""
        F = tube(2)
        C1, _ = pentagon_clusters(F)
        pentagon = next(iter(C1.faces))
        ring = [pentagon] + list(F.face_neighbors[pentagon][:2])
        with pytest.raises(InvalidGraphError) as excinfo:
            hexagon_cycle(F, ring, F.face_neighbors[pentagon][2])
        assert excinfo.value.code == 'cycle'

    def test_witnesses_one_per_layer(self):
        """Test one disjoint separating cycle per distance below the separation"""
        F, _ = tube_rings(3)
        C1, C2 = pentagon_clusters(F)
        witnesses = separating_cycle_witnesses(F, C1, C2)
        assert len(witnesses) == 3
        face_sets = [set(w.faces) for w in witnesses]
        assert not face_sets[0] & face_sets[1]
        assert not face_sets[1] & face_sets[2]
        for w in witnesses:
            validate_hexagon_cycle(F, w)

    def test_lift_gives_three_cycles(self):
        """Test that one cycle becomes three disjoint cycles after inflation"""
        F, _ = tube_rings(1)
        C1, C2 = pentagon_clusters(F)
        (cycle,) = separating_cycle_witnesses(F, C1, C2)
        inflated, inflation = goldberg_5_0(F)
        lifted = lift_hexagon_cycle(cycle, inflated, inflation)
        assert len(lifted) == 3
        face_sets = [set(c.faces) for c in lifted]
        assert not face_sets[0] & face_sets[1]
        assert not face_sets[1] & face_sets[2]
        assert not face_sets[0] & face_sets[2]

    def test_lifted_cycles_enclose_the_inside(self):
        """Test that faces descending from the cycle's inside lie inside all three lifted cycles"""
        F, _ = tube_rings(1)
        C1, C2 = pentagon_clusters(F)
        (cycle,) = separating_cycle_witnesses(F, C1, C2)
        inflated, inflation = goldberg_5_0(F)
        lifted = lift_hexagon_cycle(cycle, inflated, inflation)
        inside = inflation.children(cycle.inside)
        outside = inflation.children(cycle.outside(F))
        for ring in lifted:
            assert inside <= ring.inside
            assert not outside & ring.inside
        for inner, outer in zip(lifted, lifted[1:]):
            assert set(inner.faces) <= outer.inside


class TestReplacement:
    def test_hexagon_completion(self):
        """Test wrapping a pentagon pair in hexagons"""
        cluster = enumerate_patches(2, 0)[0]
        graph, outer = hexagon_completion(cluster, 2)
        sizes = [face.size for face in graph.faces if face.id != outer]
        assert sizes.count(5) == 2
        assert set(sizes) == {5, 6}

    def test_find_cluster_by_its_own_boundary(self):
        """Test that the search finds a patch with the cluster's boundary"""
        cluster = enumerate_patches(2, 0)[0]
        word = cluster.degree_word
        replacement = find_replacement(cluster, word)
        assert replacement.p == 2
        assert replacement.word in word + word

    def test_big_clusters_refused(self, tube):
        """Test that six-pentagon clusters are not reinstated"""
        F = tube(1)
        inflated, inflation = goldberg_5_0(F)
        with pytest.raises(PartitionError) as excinfo:
            reinstate_cluster(inflated, inflation, pentagon_clusters(F)[0])
        assert excinfo.value.code == 'out_of_range'

    def test_isolated_pentagons_only_inflate(self, c60):
        """Test one round on a fullerene with nothing to reinstate"""
        result = inflate_preserving_clusters(c60, 1)
        assert result.n == 1500
        assert pip(result) == (1,) * 12

    def test_rounds_must_be_positive(self, c60):
        """Test rejection of zero rounds"""
        with pytest.raises(PartitionError):
            inflate_preserving_clusters(c60, 0)


@pytest.fixture(scope='module')
def pentagon_pair_isomer():
    """Smallest isomer with a cluster of exactly two pentagons, inflated once"""
    for n in range(30, 52, 2):
        for code in canonical_spirals(n):
            F = wind_from_spiral(code)
            pairs = [C for C in pentagon_clusters(F) if C.size == 2]
            if pairs:
                inflated, inflation = goldberg_5_0(F)
                return F, pairs[0], inflated, inflation
    pytest.fail("No isomer with a pentagon pair up to C50")


class TestClusterReinstatement:
    def test_pair_reinstated(self, pentagon_pair_isomer):
        """Test that reinstating a pentagon pair makes the two pentagons adjacent again"""
        _, pair, inflated, inflation = pentagon_pair_isomer
        result = reinstate_cluster(inflated, inflation, pair)
        assert pip(result) == (2,) + (1,) * 10

    def test_faces_outside_region_unchanged(self, pentagon_pair_isomer):
        """Test that splicing keeps every face outside the replaced region and its neighbours"""
        F, pair, inflated, inflation = pentagon_pair_isomer
        faces = closed_cluster_faces(F, pair)
        cluster = Patch.from_faces(F, faces)
        spliced = None
        for region in (inflation.strict_children(faces), inflation.children(faces, closed=True)):
            word = region_degree_word(inflated.graph, region, region_boundary(inflated.graph, region))
            try:
                spliced = splice_region(inflated, region, find_replacement(cluster, word)), region
                break
            except (ReplacementNotFoundError, PatchError, InvalidGraphError):
                continue
        assert spliced is not None
        (result, carried), region = spliced

        outside = set(range(inflated.face_count)) - region
        assert set(carried) == outside
        assert len(set(carried.values())) == len(outside)
        for f in outside:
            assert result.faces[carried[f]].size == inflated.faces[f].size
            for g in inflated.face_neighbors[f]:
                if g in outside:
                    assert carried[g] in result.face_neighbors[carried[f]]

    def test_size_must_match(self, pentagon_pair_isomer):
        """Test that a cluster is only reinstated at its own size"""
        _, pair, inflated, inflation = pentagon_pair_isomer
        with pytest.raises(PartitionError):
            reinstate_cluster(inflated, inflation, pair, target_size=3)


SLOW_SEED_PARTITIONS = [(2, 2, 2, 2, 2, 2), (5, 4, 2, 1), (3, 3, 3, 3)]


@pytest.fixture(scope='module')
def built_seed_table(tmp_path_factory):
    path = tmp_path_factory.mktemp('seeds') / 'seeds.json'
    build_seed_table(SLOW_SEED_PARTITIONS, path=str(path))
    return str(path)


@pytest.mark.slow
class TestClusterPreservingInflation:
    @pytest.mark.parametrize('partition', SLOW_SEED_PARTITIONS)
    def test_one_round(self, built_seed_table, partition):
        """Test that one round keeps the PIP and reaches separation 3"""
        seed = seed_fullerene_for_partition(partition, path=built_seed_table)
        result = inflate_preserving_clusters(seed, 1)
        assert pip(result) == partition
        assert separation_number(result) >= 3

    @pytest.mark.parametrize('partition', SLOW_SEED_PARTITIONS)
    def test_two_rounds(self, built_seed_table, partition):
        """Test that two rounds keep the PIP and reach separation 9"""
        seed = seed_fullerene_for_partition(partition, path=built_seed_table)
        result = inflate_preserving_clusters(seed, 2)
        assert pip(result) == partition
        assert separation_number(result) >= 9


class TestSeedTable:
    def test_bundled_table(self):
        """Test that the bundled seeds load and verify"""
        table = load_seed_table()
        assert table[(1,) * 12].spiral == C60_SPIRAL

    def test_seed_from_table(self):
        """Test looking up a seed fullerene"""
        F = seed_fullerene_for_partition((1,) * 12)
        assert F.n == 60

    def test_seed_clusters_bounded(self):
        """Test that seeds exist only for clusters of at most five pentagons"""
        with pytest.raises(PartitionError) as excinfo:
            seed_fullerene_for_partition((6, 6))
        assert excinfo.value.code == 'out_of_range'

    def test_missing_seed(self):
        """Test that a partition absent from the table is an error by default"""
        with pytest.raises(SeedTableError):
            seed_fullerene_for_partition((2,) * 6)

    def test_missing_seed_searched_on_request(self, monkeypatch):
        """Test the search fallback when a caller asks for it"""
        monkeypatch.setattr(
            seeds_module, 'search_seed', lambda partition: SeedEntry(partition, C60_SPIRAL)
        )
        F = seed_fullerene_for_partition((2,) * 6, search=True)
        assert F.n == 60

    def test_seed_partitions(self):
        """Test the partitions the table has to cover"""
        partitions = seed_partitions()
        assert len(partitions) == 47
        assert partitions[0] == (5, 5, 2)
        assert partitions[-1] == (1,) * 12
        assert all(partition[0] <= 5 for partition in partitions)

    def test_search(self):
        """Test the seed search over increasing n"""
        entry = search_seed((12,), n_max=20)
        assert entry.spiral == SpiralCode(20, tuple(range(1, 13)))
        assert search_seed((11, 1), n_max=30) is None

    def test_checksum_mismatch(self, tmp_path):
        """Test that a tampered seed is rejected"""
        row = SeedEntry((1,) * 12, C60_SPIRAL).as_dict()
        row['sha256'] = '0' * 64
        path = tmp_path / 'seeds.json'
        path.write_text(json.dumps({'format': 1, 'seeds': [row]}))
        with pytest.raises(SeedTableError):
            load_seed_table(str(path))

    def test_wrong_pip_in_table(self, tmp_path):
        """Test that a seed listed under the wrong PIP is rejected"""
        row = SeedEntry((1,) * 12, C60_SPIRAL).as_dict()
        row['pip'] = [2] * 6
        path = tmp_path / 'seeds.json'
        path.write_text(json.dumps({'format': 1, 'seeds': [row]}))
        with pytest.raises(SeedTableError):
            load_seed_table(str(path))

    def test_unsupported_format(self, tmp_path):
        """Test rejection of an unknown table format"""
        path = tmp_path / 'seeds.json'
        path.write_text(json.dumps({'format': 2, 'seeds': []}))
        with pytest.raises(SeedTableError):
            load_seed_table(str(path))

    def test_build_table(self, tmp_path, monkeypatch):
        """Test writing a manifest with its planar_code file"""
        monkeypatch.setattr(
            seeds_module, 'search_seed', lambda partition, n_max=None, jobs=1: SeedEntry(partition, C60_SPIRAL)
        )
        path = tmp_path / 'seeds.json'
        manifest = build_seed_table([(1,) * 12], path=str(path))
        assert manifest['seeds'][0]['n'] == 60
        assert (tmp_path / 'seeds.pc').exists()
        table = load_seed_table(str(path))
        assert table[(1,) * 12].spiral == C60_SPIRAL
