import io
import json
from unittest.mock import patch

import pytest

from apps.core.cli import EXIT_DATA, EXIT_OK, EXIT_USAGE
from apps.goldberg.services import seeds as seeds_module
from apps.goldberg.services.seeds import SeedEntry
from apps.isomers.models import CensusRun
from apps.planarcode.services.codec import read_planar_code, write_planar_code
from apps.spirals.services.spiral import SpiralCode


class TestDispatch:
    def test_unknown_command(self, run_cli):
        """Test that an unknown command prints usage"""
        code, out, err = run_cli('frobnicate')
        assert code == EXIT_USAGE
        assert err.startswith('usage: pentaclusters {generate,')
        assert out == ''

    def test_no_command(self, run_cli):
        """Test running without arguments"""
        code, _, err = run_cli()
        assert code == EXIT_USAGE
        assert 'usage' in err

    def test_usage_error(self, run_cli):
        """Test that a missing required flag is a usage error"""
        code, _, err = run_cli('tube')
        assert code == EXIT_USAGE
        assert err.startswith('tube: ')

    def test_data_error(self, run_cli):
        """Test that an invalid partition exits with 2"""
        code, out, err = run_cli('classify', '9,2')
        assert code == EXIT_DATA
        assert out == ''
        assert err.startswith('classify: ')


class TestClassifyCommand:
    @pytest.mark.parametrize('text, expected', [
        ('9,2,1', 'impossible (a)'),
        ('12', 'finite (b), 41 fullerenes'),
        ('pentagon_cluster_6_6', 'infinite, unbounded separation (d)'),
    ])
    def test_classify(self, run_cli, text, expected):
        """Test the class printed for a partition"""
        code, out, _ = run_cli('classify', text)
        assert code == EXIT_OK
        assert out == expected + '\n'

    def test_all(self, run_cli):
        """Test listing every partition of 12"""
        code, out, _ = run_cli('classify', '--all')
        lines = out.splitlines()
        assert code == EXIT_OK
        assert len(lines) == 77
        assert lines[0] == '12\tfinite (b), 41 fullerenes'

    def test_nothing_to_classify(self, run_cli):
        """Test that classify needs an argument"""
        code, _, _ = run_cli('classify')
        assert code == EXIT_USAGE


class TestBoundsCommand:
    def test_cluster_bound(self, run_cli):
        """Test the bound for a seven-pentagon cluster"""
        code, out, _ = run_cli('bounds', '--cluster', '7')
        assert code == EXIT_OK
        assert out == 'max hexagons 52, max vertices 124\n'

    def test_min_boundary(self, run_cli):
        """Test the least boundary of a patch"""
        code, out, err = run_cli('bounds', '--p', '1', '--h', '1')
        assert code == EXIT_OK
        assert out == 'min boundary 9\n'
        assert err == ''

    def test_two_pentagons_add_a_note(self, run_cli):
        """Test the note printed for two-pentagon patches"""
        code, out, err = run_cli('bounds', '--p', '2', '--h', '2')
        assert code == EXIT_OK
        assert out == 'min boundary 12\n'
        assert err != ''

    def test_ambiguous_query(self, run_cli):
        """Test that --h and --b cannot be combined"""
        code, _, _ = run_cli('bounds', '--p', '1', '--h', '1', '--b', '9')
        assert code == EXIT_USAGE

    def test_cluster_out_of_range(self, run_cli):
        """Test a cluster size without a bound"""
        code, _, _ = run_cli('bounds', '--cluster', '6')
        assert code == EXIT_DATA


class TestSpiralCommands:
    def test_spiral_id_of_a_spiral(self, run_cli):
        """Test looking up the id of a spiral"""
        code, out, _ = run_cli('spiral-id', '20: 1 2 3 4 5 6 7 8 9 10 11 12')
        assert code == EXIT_OK
        assert out == '20:1\n'

    def test_spiral_of_an_id(self, run_cli):
        """Test the canonical spiral printed for an id"""
        code, out, _ = run_cli('spiral-id', '--id', '20:1')
        assert code == EXIT_OK
        assert out == '20: 1 2 3 4 5 6 7 8 9 10 11 12\n'

    def test_malformed_id(self, run_cli):
        """Test rejection of a malformed spiral id"""
        code, _, _ = run_cli('spiral-id', '--id', 'forty')
        assert code == EXIT_USAGE

    def test_rank_out_of_range(self, run_cli):
        """Test an id past the last isomer"""
        code, _, _ = run_cli('spiral-id', '--id', '20:2')
        assert code == EXIT_DATA

    def test_point_group(self, run_cli):
        """Test the point group of a numbered isomer"""
        code, out, _ = run_cli('point-group', '40:39')
        assert code == EXIT_OK
        assert out == '40:39\tD5d\n'

    def test_point_group_axes(self, run_cli):
        """Test listing rotation axes"""
        code, out, _ = run_cli('point-group', '20: 1 2 3 4 5 6 7 8 9 10 11 12', '--axes')
        assert code == EXIT_OK
        name, axes = out.rstrip('\n').split('\t')
        assert name == 'Ih'
        assert set(axes.split()) == {'C5x6', 'C3x10', 'C2x15'}

    def test_not_a_fullerene_spiral(self, run_cli):
        """Test a spiral that does not wind"""
        code, _, _ = run_cli('spiral-id', '20: 1 2 3 4 5 6 7 8 9 10 11 13')
        assert code == EXIT_DATA

    def test_tube_spiral(self, run_cli):
        """Test the spiral of a tube fullerene"""
        code, out, _ = run_cli('tube', '--rings', '1', '--spiral')
        assert code == EXIT_OK
        assert out == '30: 1 2 3 4 5 6 12 13 14 15 16 17\n'

    def test_tube_record(self, run_cli):
        """Test the analysis record of a tube fullerene"""
        code, out, _ = run_cli('tube', '--rings', '2', '--format', 'json')
        assert code == EXIT_OK
        row = json.loads(out)
        assert row['n'] == 40
        assert row['pip'] == '6,6'
        assert row['separation'] == 3


class TestGraphCommands:
    def test_generate(self, run_cli):
        """Test spirals printed for a range of orders"""
        code, out, _ = run_cli('generate', '--n', '20', '--n-max', '26')
        assert code == EXIT_OK
        assert [line.split('\t')[0] for line in out.splitlines()] == ['20:1', '24:1', '26:1']
        assert out.splitlines()[0] == '20:1\t20: 1 2 3 4 5 6 7 8 9 10 11 12'

    def test_generate_planar_code(self, run_cli, tmp_path):
        """Test writing generated isomers to a planar_code file"""
        path = tmp_path / 'c28.pc'
        code, _, _ = run_cli('generate', '--n', '28', '--format', 'planar_code', '--out', str(path))
        assert code == EXIT_OK
        assert [len(g) for g in read_planar_code(path.read_bytes())] == [28, 28]

    def test_generate_below_20(self, run_cli):
        """Test rejection of orders below 20"""
        code, _, _ = run_cli('generate', '--n', '18')
        assert code == EXIT_USAGE

    def test_analyze_stdin(self, run_cli, dodecahedron, c60):
        """Test analyzing planar_code read from stdin"""
        stdin = io.BytesIO(write_planar_code([dodecahedron.graph, c60.graph]))
        code, out, _ = run_cli('analyze', '--pip', '12', stdin=stdin)
        assert code == EXIT_OK
        assert out == '20\t20:1\t12\t-\tIh\tpentagon_cluster_12\n'

    def test_analyze_bad_input(self, run_cli):
        """Test that a malformed planar_code stream is a data error"""
        code, _, err = run_cli('analyze', stdin=io.BytesIO(b'not planar code'))
        assert code == EXIT_DATA
        assert err.startswith('analyze: ')

    def test_missing_file(self, run_cli, tmp_path):
        """Test an input file that does not exist"""
        code, _, _ = run_cli('analyze', '--in', str(tmp_path / 'missing.pc'))
        assert code == EXIT_USAGE

    def test_census(self, run_cli):
        """Test a small census printed as records"""
        code, out, _ = run_cli('census', '--n', '20', '--n-max', '28', '--pip', '12', '--no-progress')
        assert code == EXIT_OK
        ids = [line.split('\t')[1] for line in out.splitlines()]
        assert ids == ['20:1', '24:1', '26:1', '28:1', '28:2']

    def test_census_needs_a_range(self, run_cli):
        """Test that census asks for an order range"""
        code, _, _ = run_cli('census', '--pip', '12')
        assert code == EXIT_USAGE

    @pytest.mark.django_db
    def test_census_queue(self, run_cli):
        """Test queueing a census as a background task"""
        with patch('apps.isomers.tasks.run_census.delay') as mock_delay:
            code, out, _ = run_cli('census', '--n', '20', '--n-max', '40', '--pip', '12', '--pip', '11,1', '--queue')
        assert code == EXIT_OK
        run = CensusRun.objects.get()
        assert out == f'{run.id}\n'
        assert run.pip_filter == '12;11,1'
        mock_delay.assert_called_once_with(run.id)

    def test_inflate(self, run_cli):
        """Test one inflation round of C20"""
        code, out, _ = run_cli('inflate', '20:1', '--plain')
        assert code == EXIT_OK
        fields = out.rstrip('\n').split('\t')
        assert fields[0] == '500'
        assert fields[2] == '1,1,1,1,1,1,1,1,1,1,1,1'

    def test_inflate_rounds(self, run_cli):
        """Test rejection of zero rounds"""
        code, _, _ = run_cli('inflate', '20:1', '--rounds', '0')
        assert code == EXIT_USAGE


class TestBuildSeedsCommand:
    def test_writes_table(self, run_cli, tmp_path, monkeypatch):
        """Test writing a seed table for chosen partitions"""
        monkeypatch.setattr(seeds_module, 'search_seed', lambda partition, n_max=None, jobs=1: SeedEntry(
            partition, SpiralCode(60, (1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32))
        ))
        path = tmp_path / 'seeds.json'
        code, out, _ = run_cli('build-seeds', '--pip', '1,1,1,1,1,1,1,1,1,1,1,1', '--seed-table', str(path))
        assert code == EXIT_OK
        assert out == '1,1,1,1,1,1,1,1,1,1,1,1\t60: 1 7 9 11 13 15 18 20 22 24 26 32\n'
        assert (tmp_path / 'seeds.pc').exists()

    def test_missing_seed_fails(self, run_cli, tmp_path, monkeypatch):
        """Test that a partition without a seed fails the build"""
        monkeypatch.setattr(seeds_module, 'search_seed', lambda partition, n_max=None, jobs=1: None)
        path = tmp_path / 'seeds.json'
        code, _, err = run_cli('build-seeds', '--pip', '2,2,2,2,2,2', '--seed-table', str(path))
        assert code == EXIT_DATA
        assert err.startswith('build-seeds: ')
        assert not path.exists()
