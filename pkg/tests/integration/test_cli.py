"""
Integration tests for the command-line front end.
"""
import json

import pytest

from app.cli.main import main
from tests.fixtures.tables import M_TABLE


@pytest.fixture
def write_network(tmp_path):
    """Write a network document and return its path as a string."""
    def write(name, rows):
        path = tmp_path / name
        path.write_text(json.dumps({'cells': len(rows), 'in_adjacency': rows}))
        return str(path)
    return write


class TestCount:
    """Test cases for the count command."""

    @pytest.mark.parametrize("argv,expected", [
        (['count', 'M', '3', '3'], "128\n"),
        (['count', 'H', '1', '5'], "1\n"),
        (['count', 'K', '5', '4'], "14000798\n"),
        (['count', 'H', '6', '6'], "13508534834704\n"),
    ])
    def test_count(self, capsys, argv, expected):
        assert main(argv) == 0
        assert capsys.readouterr().out == expected

    @pytest.mark.parametrize("argv", [
        ['count', 'X', '3', '3'],
        ['count', 'M', '0', '3'],
        ['count', 'M', '3', 'three'],
    ])
    def test_invalid_arguments(self, capsys, argv):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2
        assert capsys.readouterr().err

    def test_above_partition_cap(self, capsys):
        assert main(['count', 'H', '65', '1']) == 2
        assert 'error' in capsys.readouterr().err


class TestTable:
    """Test cases for the table command."""

    def test_published_minimal_table(self, capsys):
        assert main(['table', 'M', '6', '6', '--format', 'csv']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n/r,1,2,3,4,5,6"
        assert lines[1:] == [
            ",".join(str(v) for v in [n] + row) for n, row in enumerate(M_TABLE, start=1)
        ]

    def test_single_cell(self, capsys):
        assert main(['table', 'H', '1', '1']) == 0
        assert capsys.readouterr().out == "n/r,1\n1,1\n"

    def test_connected_row(self, capsys):
        assert main(['table', 'K', '2', '3']) == 0
        assert capsys.readouterr().out.splitlines()[2] == "2,2,5,9"

    def test_json(self, capsys):
        assert main(['table', 'H', '2', '2', '--format', 'json']) == 0
        assert json.loads(capsys.readouterr().out)['values'] == [[1, 1], [3, 6]]

    def test_invalid_format(self):
        with pytest.raises(SystemExit) as info:
            main(['table', 'H', '2', '2', '--format', 'xml'])
        assert info.value.code == 2

    def test_deterministic(self, capsys):
        main(['table', 'K', '6', '6'])
        first = capsys.readouterr().out
        main(['table', 'K', '6', '6', '--workers', '4'])
        assert capsys.readouterr().out == first


class TestReduce:
    """Test cases for the reduce command."""

    def test_figure_network(self, capsys, write_network):
        path = write_network('three.json', [[5, 3, 0], [0, 2, 6], [3, 3, 2]])
        assert main(['reduce', path]) == 0
        assert capsys.readouterr().out == (
            '{"cells":3,"in_adjacency":[[1,1,0],[0,0,2],[1,1,0]]}\n'
            '{"loops_removed":2,"divisor":3}\n'
        )

    def test_reduced_input(self, capsys, write_network):
        path = write_network('cycle.json', [[0, 1], [1, 0]])
        assert main(['reduce', path]) == 0
        assert capsys.readouterr().out.splitlines()[1] == '{"loops_removed":0,"divisor":1}'

    def test_all_ones(self, capsys, write_network):
        path = write_network('ones.json', [[1, 1], [1, 1]])
        assert main(['reduce', path]) == 0
        assert capsys.readouterr().out.splitlines() == [
            '{"cells":2,"in_adjacency":[[0,1],[1,0]]}',
            '{"loops_removed":1,"divisor":1}',
        ]

    def test_malformed_input(self, capsys, write_network):
        path = write_network('bad.json', [[0, 1], [-1, 2]])
        assert main(['reduce', path]) == 2
        assert 'in_adjacency[1][0]' in capsys.readouterr().err


class TestEquiv:
    """Test cases for the equiv command."""

    def test_split_network(self, capsys, write_network):
        a = write_network('a.json', [[1, 1, 0], [0, 0, 2], [1, 1, 0]])
        b = write_network('b.json', [[3, 3, 0], [0, 0, 6], [3, 3, 0]])
        assert main(['equiv', a, b]) == 0
        assert capsys.readouterr().out == "equivalent\n"

    def test_two_minimal_two_cell_networks(self, capsys, write_network):
        a = write_network('a.json', [[0, 1], [1, 0]])
        b = write_network('b.json', [[1, 0], [1, 0]])
        assert main(['equiv', a, b, '--oracle']) == 1
        assert capsys.readouterr().out == "not-equivalent\n"

    def test_figure_networks_with_oracle(self, capsys, write_network):
        a = write_network('a.json', [[1, 1, 0], [0, 0, 2], [1, 1, 0]])
        b = write_network('b.json', [[2, 6, 0], [3, 2, 3], [3, 0, 5]])
        assert main(['equiv', a, b, '--oracle']) == 0

    def test_disagreement(self, capsys, write_network, mocker):
        mocker.patch('app.cli.main.linear_equiv_oracle', return_value=False)
        a = write_network('a.json', [[0, 1], [1, 0]])
        b = write_network('b.json', [[0, 2], [2, 0]])
        assert main(['equiv', a, b, '--oracle']) == 3

    def test_missing_file(self, capsys, tmp_path, write_network):
        a = write_network('a.json', [[0, 1], [1, 0]])
        assert main(['equiv', a, str(tmp_path / 'absent.json')]) == 2

    def test_undecodable_file_is_an_input_error(self, capsys, tmp_path, write_network):
        a = write_network('a.json', [[0, 1], [1, 0]])
        b = tmp_path / 'b.json'
        b.write_bytes(b'{"cells":2,"in_adjacency":[[0,1],[1,0]]}\xff\xfe')
        assert main(['equiv', a, str(b)]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert 'not valid UTF-8' in captured.err


class TestVerify:
    """Test cases for the verify command."""

    def test_passes(self, capsys):
        assert main(['verify', '3', '2']) == 0
        out = capsys.readouterr().out
        assert out.startswith("verification n=3 r=2\n")
        assert "FAIL" not in out

    def test_json(self, capsys):
        assert main(['verify', '2', '6', '--format', 'json']) == 0
        document = json.loads(capsys.readouterr().out)
        assert document['n'] == 2 and document['r'] == 6
        assert all(check['pass'] for check in document['checks'])

    def test_budget_exceeded(self, capsys):
        assert main(['verify', '6', '6']) == 2
        assert str(462 ** 6) in capsys.readouterr().err

    def test_explicit_budget(self, capsys):
        assert main(['verify', '3', '2', '--budget', '100']) == 2


class TestEnumerate:
    """Test cases for the enumerate command."""

    def test_minimal_two_cell(self, capsys):
        assert main(['enumerate', '2', '1', '--minimal']) == 0
        assert len(capsys.readouterr().out.splitlines()) == 2

    def test_minimal_connected_three_cell(self, capsys):
        assert main(['enumerate', '3', '1', '--connected', '--minimal']) == 0
        assert len(capsys.readouterr().out.splitlines()) == 4

    def test_single_cell(self, capsys):
        assert main(['enumerate', '1', '2']) == 0
        assert capsys.readouterr().out == '{"cells":1,"in_adjacency":[[2]]}\n'

    @pytest.mark.parametrize("flags,family", [([], 'H'), (['--connected'], 'K'), (['--connected', '--minimal'], 'M')])
    def test_line_counts_match_counts(self, capsys, flags, family):
        main(['enumerate', '3', '2'] + flags)
        lines = capsys.readouterr().out.splitlines()
        main(['count', family, '3', '2'])
        assert str(len(lines)) == capsys.readouterr().out.strip()

    def test_budget_exceeded(self, capsys):
        assert main(['enumerate', '6', '6']) == 2


class TestExpand:
    """Test cases for the expand command."""

    def test_expand(self, capsys, write_network):
        path = write_network('ones.json', [[1, 1], [1, 1]])
        assert main(['expand', path, '3']) == 0
        assert capsys.readouterr().out.splitlines() == [
            '{"cells":2,"in_adjacency":[[2,1],[1,2]]}',
            '{"cells":2,"in_adjacency":[[1,2],[2,1]]}',
            '{"cells":2,"in_adjacency":[[0,3],[3,0]]}',
        ]

    def test_single_cell_has_no_expansions(self, capsys, write_network):
        path = write_network('one.json', [[3]])
        assert main(['expand', path, '3']) == 2


class TestFormatFlag:
    """Test cases for --format on commands with a single output form."""

    @pytest.mark.parametrize("argv", [
        ['verify', '2', '1', '--format', 'csv'],
        ['verify', '2', '1', '--format', 'markdown'],
        ['count', 'M', '3', '3', '--format', 'json'],
        ['enumerate', '2', '1', '--format', 'csv'],
    ])
    def test_unsupported_format_is_rejected(self, capsys, argv):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert f"{argv[0]} does not support --format {argv[-1]}" in captured.err

    def test_reduce_rejects_format(self, capsys, write_network):
        path = write_network('cycle.json', [[0, 1], [1, 0]])
        with pytest.raises(SystemExit) as info:
            main(['reduce', path, '--format', 'json'])
        assert info.value.code == 2


class TestConfiguration:
    """Test cases for settings checked before any command runs."""

    def test_zero_chunk_size(self, capsys, mocker):
        mocker.patch.dict('app.config.settings.ORACLE_CONFIG', {'chunk_size': 0})
        assert main(['enumerate', '2', '1']) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "oracle.chunk_size=0 must be a positive integer" in captured.err

    def test_unparsable_worker_count(self, capsys, mocker):
        mocker.patch.dict('app.config.settings.COMBINATORICS_CONFIG', {'table_workers': 'four'})
        assert main(['table', 'H', '2', '2']) == 2
        assert "combinatorics.table_workers='four'" in capsys.readouterr().err
