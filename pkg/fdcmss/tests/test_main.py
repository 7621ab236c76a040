"""Test the command line
"""
import pytest

from fdcmss import enums, main


def test_sizing(capsys):
    """Test the sizing command.
    """
    assert main.main(['sizing', '--variable', 'epsilon', '--start', '0.001', '--end', '0.01', '--steps', '3']) == 0
    lines = capsys.readouterr().out.splitlines()

    assert lines[0] == "variable,value,fdcmss_cells,fdcmss_kb,lhcount_cells,lhcount_kb"
    assert len(lines) == 4
    assert lines[1].startswith("epsilon,0.001,")


def test_gen_stats(tmp_path, capsys):
    """Test generating a stream and computing its statistics.
    """
    path = tmp_path / 'zipf.txt'
    assert main.main(['gen', '--n', '100', '--universe', '50', '--seed', '3', '--out', str(path)]) == 0
    assert len(path.read_text().splitlines()) == 100

    assert main.main(['stats', '--in', str(path)]) == enums.ExitCode.OK
    lines = capsys.readouterr().out.splitlines()

    assert lines[:2] == ["statistic,value", "count,100"]
    assert len(lines) == 9


def test_run_query(tmp_path, capsys):
    """Test querying a snapshot written by an experiment.
    """
    snapshot_dir = tmp_path / 'snapshots'
    assert main.main([
        'run', '--algorithm', 'fdcmss', '--n', '500', '--universe', '100', '--runs', '1', '--seed', '7',
        '--epsilon', '0.01', '--delta', '0.05', '--phi', '0.05', '--snapshot-dir', str(snapshot_dir), '--no-timing',
        '--out', str(tmp_path / 'run.csv'),
    ]) == 0
    assert len((tmp_path / 'run.csv').read_text().splitlines()) == 2

    assert main.main(['query', '--snapshot', str(snapshot_dir / 'fdcmss-0-7.fdc'), '--t', '501']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "item,estimate"
    estimates = [float(line.split(',')[1]) for line in lines[1:]]
    assert estimates == sorted(estimates, reverse=True)

    assert main.main(['query', '--snapshot', str(snapshot_dir / 'fdcmss-0-7.fdc'), '--t', '501', '--phi', '0.5']) == 0
    assert len(capsys.readouterr().out.splitlines()) <= len(lines)


def test_input_errors(tmp_path):
    """Test that missing and malformed input files exit with the input error code.
    """
    assert main.main(['stats', '--in', str(tmp_path / 'missing.txt')]) == enums.ExitCode.INPUT_ERROR

    path = tmp_path / 'bad.txt'
    path.write_text("1 2\n3 x\n")
    assert main.main(['stats', '--in', str(path)]) == enums.ExitCode.INPUT_ERROR

    path.write_bytes(b'not a snapshot')
    assert main.main(['query', '--snapshot', str(path), '--t', '1']) == enums.ExitCode.INPUT_ERROR


def test_configuration_errors(tmp_path):
    """Test that invalid parameters exit with the configuration error code.
    """
    out = str(tmp_path / 'run.csv')

    assert main.main(['run', '--n', '100', '--epsilon', '0.05', '--phi', '0.01', '--out', out]) == \
        enums.ExitCode.CONFIGURATION_ERROR
    assert main.main(['run', '--n', '100', '--decay', 'poly', '--out', out]) == enums.ExitCode.CONFIGURATION_ERROR
    assert main.main(['sizing', '--prob', '1.5', '--variable', 'epsilon']) == enums.ExitCode.CONFIGURATION_ERROR


def test_version(capsys):
    """Test the version flag.
    """
    with pytest.raises(SystemExit):
        main.main(['--version'])

    assert capsys.readouterr().out.startswith("fdcmss ")


def test_help(capsys):
    """Test that the command help describes the choices of the arguments.
    """
    for command, description in (('sizing', "p (Success probability)"), ('stats', "int (Whitespace separated")):
        with pytest.raises(SystemExit):
            main.main([command, '--help'])

        assert description in ' '.join(capsys.readouterr().out.split())
