import random

import pytest

from apps.core.exceptions import PatchError
from apps.patches.services.bounds import (
    PUBLISHED_HEXAGON_BOUNDS,
    max_hexagons_in_patch,
    max_hexagons_with_cluster,
    max_vertices_with_big_cluster,
    max_vertices_with_cluster,
    min_boundary_length,
)
from apps.patches.services.enumeration import enumerate_patches, is_closable, min_boundary_by_enumeration
from apps.patches.services.merge import merge_patches, two_two_edge
from apps.patches.services.patch import Patch, PatchBuilder, boundary_code, single_face_patch


class TestPatch:
    def test_single_pentagon(self):
        """Test the one-face patch"""
        patch = single_face_patch(5)
        assert (patch.p, patch.h, patch.b) == (1, 0, 5)
        assert patch.degree_word == '22222'

    def test_attach_face(self):
        """Test attaching a hexagon to a pentagon along one edge"""
        builder = PatchBuilder.single_face(5)
        builder.attach_face(0, 1, 6)
        patch = builder.freeze()
        assert (patch.p, patch.h, patch.b) == (1, 1, 9)
        assert sorted(boundary_code(patch)) == sorted('222222233')

    def test_attach_face_needs_degree_2_ends(self):
        """Test that a face cannot start at a degree-3 vertex"""
        builder = PatchBuilder.single_face(5)
        builder.attach_face(0, 1, 6)
        start = builder.degree_word().index('3')
        with pytest.raises(PatchError) as excinfo:
            builder.attach_face(start, 1, 6)
        assert excinfo.value.code == 'growth'

    def test_region_of_separate_faces(self, c60):
        """Test that a face set with two boundary components is not a patch"""
        a, b = c60.pentagon_indices[:2]
        with pytest.raises(PatchError):
            Patch.from_faces(c60, {a, b})

    def test_from_faces(self, c60):
        """Test cutting a pentagon and its five hexagons out of C60"""
        face = c60.pentagon_indices[0]
        patch = Patch.from_faces(c60, {face} | set(c60.face_neighbors[face]))
        assert (patch.p, patch.h) == (1, 5)
        assert patch.b == 15

    def test_runs(self):
        """Test maximal runs of degree-3 vertices"""
        patch = single_face_patch(6)
        assert [run.length for run in patch.runs()] == [0] * 6


class TestBounds:
    @pytest.mark.parametrize('p, h, expected', [
        (0, 1, 6), (0, 2, 10), (0, 3, 12), (1, 0, 5), (1, 1, 9),
        (2, 0, 8), (2, 1, 10), (2, 2, 12),
    ])
    def test_min_boundary_length(self, p, h, expected):
        """Test closed-form boundary bounds on small patches"""
        assert min_boundary_length(p, h) == expected

    @pytest.mark.parametrize('p', [0, 1, 2])
    def test_formula_matches_enumeration(self, p):
        """Test the closed form against exhaustive patch enumeration"""
        for h in range(0, 5):
            if p + h == 0:
                continue
            assert min_boundary_length(p, h) == min_boundary_by_enumeration(p, h)

    def test_pentagon_budget(self):
        """Test rejection of more than five pentagons"""
        with pytest.raises(PatchError) as excinfo:
            min_boundary_length(6, 0)
        assert excinfo.value.code == 'pentagon_budget'

    def test_max_hexagons_in_patch(self):
        """Test the inverse of the boundary bound"""
        assert max_hexagons_in_patch(0, 10) == 2
        assert max_hexagons_in_patch(2, 7) == 0

    def test_big_cluster_bounds(self):
        """Test the hexagon bounds for clusters of 7 to 12 pentagons"""
        bounds = tuple(max_hexagons_with_cluster(k) for k in range(7, 13))
        assert bounds == (52, 36, 31, 30, 30, 30)
        assert bounds == tuple(PUBLISHED_HEXAGON_BOUNDS[k] for k in range(7, 13))

    def test_vertex_bound(self):
        """Test that a cluster of 7 or more forces n <= 124"""
        assert max_vertices_with_cluster(7) == 124
        assert max_vertices_with_cluster(8) == 92
        assert max_vertices_with_big_cluster() == 124

    def test_cluster_size_range(self):
        """Test rejection of clusters outside 7..12"""
        with pytest.raises(PatchError):
            max_hexagons_with_cluster(6)

    def test_disagreeing_bound_raises(self, monkeypatch):
        """Test that a computed bound must match the published table"""
        monkeypatch.setitem(PUBLISHED_HEXAGON_BOUNDS, 7, 53)
        with pytest.raises(PatchError) as excinfo:
            max_hexagons_with_cluster(7)
        assert excinfo.value.code == 'published_bound'


class TestEnumeration:
    @pytest.mark.parametrize('p, h, count', [
        (1, 0, 1), (0, 2, 1), (1, 1, 1), (2, 0, 1), (0, 3, 3), (6, 0, 17),
    ])
    def test_patch_counts(self, p, h, count):
        """Test the number of patches up to isomorphism"""
        assert len(enumerate_patches(p, h)) == count

    def test_empty_patch(self):
        """Test that a patch needs at least one face"""
        with pytest.raises(PatchError):
            enumerate_patches(0, 0)

    def test_unclosable_patch_dropped(self):
        """Test that a pentagon patch with five degree-3 vertices in a row is left out"""
        everything = enumerate_patches(6, 0, closable_only=False)
        closable = enumerate_patches(6, 0)
        assert len(everything) == 18
        dropped = [patch for patch in everything if not is_closable(patch)]
        assert len(dropped) == 1
        word = dropped[0].degree_word
        assert '33333' in word + word
        assert {patch.code() for patch in closable} == {patch.code() for patch in everything if is_closable(patch)}

    @pytest.mark.parametrize('p, h', [(3, 0), (4, 0), (5, 0), (2, 2)])
    def test_no_long_runs(self, p, h):
        """Test that every enumerated patch can still be covered"""
        for patch in enumerate_patches(p, h):
            assert all(run.length <= 4 for run in patch.runs())


class TestMerge:
    def test_two_two_edge(self):
        """Test that a pentagon has an edge with two degree-2 ends"""
        patch = single_face_patch(5)
        u, v = two_two_edge(patch)
        assert patch.graph.has_edge(u, v)

    def test_merge_two_pentagons(self):
        """Test merging keeps the boundary length and adds hexagons"""
        merged = merge_patches([single_face_patch(5), single_face_patch(5)])
        assert merged.p == 2
        assert merged.h >= 1
        assert merged.b == 10

    def test_random_pairs(self):
        """Test merge invariants on random patch pairs"""
        rng = random.Random(1701)
        pool = [patch for p in range(3) for h in range(3) if p + h for patch in enumerate_patches(p, h)]
        for _ in range(200):
            P, Q = rng.choice(pool), rng.choice(pool)
            merged = merge_patches([P, Q])
            assert merged.p == P.p + Q.p
            assert merged.h > P.h + Q.h
            assert merged.b == P.b + Q.b

    def test_pentagon_budget(self):
        """Test that merges may hold at most five pentagons"""
        three = enumerate_patches(3, 0)[0]
        with pytest.raises(PatchError) as excinfo:
            merge_patches([three, three])
        assert excinfo.value.code == 'pentagon_budget'

    def test_needs_two_patches(self):
        """Test that a single patch cannot be merged"""
        with pytest.raises(PatchError):
            merge_patches([single_face_patch(6)])
