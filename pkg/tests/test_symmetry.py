import pytest

from apps.core.exceptions import SymmetryError
from apps.spirals.services.numbering import isomer_from_id
from apps.symmetry.services.automorphisms import automorphisms, fixed_sites
from apps.symmetry.services.point_group import GROUP_ORDERS, PointGroup, point_group, rotation_axes


class TestAutomorphisms:
    def test_dodecahedron_group_order(self, dodecahedron):
        """Test the full icosahedral group of C20"""
        group = automorphisms(dodecahedron)
        assert group.order == 120
        assert group.rotation_order == 60
        assert len(group.improper) == 60

    def test_identity_fixes_everything(self, c60):
        """Test fixed sites of the identity"""
        identity = next(g for g in automorphisms(c60).rotations if g.is_identity)
        assert identity.order == 1
        assert len(fixed_sites(c60, identity).vertices) == 60

    def test_element_orders_divide_group_order(self, c60):
        """Test Lagrange on the automorphisms of C60"""
        group = automorphisms(c60)
        assert group.order == 120
        for g in group.rotations:
            assert group.order % g.order == 0

    def test_icosahedral_axes(self, c60):
        """Test the 6 five-fold, 10 three-fold and 15 two-fold axes"""
        assert rotation_axes(c60) == {5: 6, 3: 10, 2: 15}


class TestPointGroup:
    def test_dodecahedron(self, dodecahedron):
        """Test the point group of C20"""
        group = point_group(dodecahedron)
        assert group.name == 'Ih'
        assert group.order == 120
        assert not group.is_chiral

    def test_c60(self, c60):
        """Test the point group of buckminsterfullerene"""
        assert str(point_group(c60)) == 'Ih'

    @pytest.mark.parametrize('n, rank, name', [
        (24, 1, 'D6d'),
        (26, 1, 'D3h'),
        (28, 1, 'D2'),
        (28, 2, 'Td'),
        (30, 2, 'C2v'),
        (40, 39, 'D5d'),
    ])
    def test_recorded_isomers(self, n, rank, name):
        """Test point groups of isomers with a recorded symmetry"""
        assert point_group(isomer_from_id(n, rank)).name == name

    def test_tube_has_five_fold_axis(self, tube):
        """Test that the tube's main axis is five-fold"""
        group = point_group(tube(1))
        assert group.name in ('D5h', 'D5d')
        assert dict(group.axes)[5] == 1

    def test_group_names_and_orders(self):
        """Test validation of point group records"""
        assert len(GROUP_ORDERS) == 28
        with pytest.raises(SymmetryError):
            PointGroup('C7', 7, 7)
        with pytest.raises(SymmetryError):
            PointGroup('Td', 12, 12)
        assert PointGroup('D2', 4, 4).is_chiral
