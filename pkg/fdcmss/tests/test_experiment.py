"""Test the experiment runner
"""
import io
import statistics

import pydantic
import pytest

from fdcmss import enums, exceptions, experiment, models
from fdcmss.tests import factories


def csv_output(config: models.ExperimentConfig) -> str:
    """Run an experiment and return its CSV output.

    :param config: The experiment configuration.
    :return: The CSV output.
    """
    file = io.StringIO()
    experiment.write_csv(experiment.run_experiment(config), file, models.ExperimentRow)

    return file.getvalue()


def test_rows():
    """Test that there is one row for each point, run and algorithm, with paired seeds.
    """
    config = factories.ExperimentConfigFactory(sweep=enums.SweepVariable.PHI, values=[0.02, 0.05])
    rows = list(experiment.run_experiment(config))

    assert len(rows) == 2 * 2 * 2
    assert [row.algo for row in rows] == ['fdcmss', 'lhcount'] * 4
    assert [row.seed for row in rows] == [config.seed, config.seed, config.seed + 1, config.seed + 1] * 2
    assert [row.phi for row in rows] == [0.02] * 4 + [0.05] * 4
    for row in rows:
        assert row.n == 2_000
        assert row.rho == 1.1
        assert 0 <= row.recall <= 1 and 0 <= row.precision <= 1
        assert row.maxae >= row.p96ae
        assert row.upd_per_ms == 0


def test_determinism():
    """Test that experiments without timing are reproducible, whatever the number of jobs.
    """
    config = factories.ExperimentConfigFactory()
    output = csv_output(config)

    assert output.splitlines()[0] == ','.join(models.ExperimentRow.header())
    assert len(output.splitlines()) == 1 + 2 * 2
    assert csv_output(config) == output
    assert csv_output(config.model_copy(update={'jobs': 2})) == output


def test_stream_sweep():
    """Test the stream length sweep.
    """
    config = factories.ExperimentConfigFactory(
        algorithms=enums.AlgorithmSelection.FDCMSS, sweep=enums.SweepVariable.N, values=[500, 1000], runs=1)

    assert [row.n for row in experiment.run_experiment(config)] == [500, 1000]


def test_budget():
    """Test that both algorithms fit the same byte budget.
    """
    config = factories.ExperimentConfigFactory(sweep=enums.SweepVariable.SKETCH_KB, values=[32, 64], runs=1)
    rows = list(experiment.run_experiment(config))

    for budget, point_rows in zip(config.values, (rows[:2], rows[2:])):
        for row in point_rows:
            assert 0.98 * budget < row.sketch_kb <= budget


def test_polynomial():
    """Test that polynomial decay is only accepted for FDCMSS runs.
    """
    with pytest.raises(pydantic.ValidationError):
        factories.ExperimentConfigFactory(decay_kind=enums.DecayKind.POLYNOMIAL)

    config = factories.ExperimentConfigFactory(
        algorithms=enums.AlgorithmSelection.FDCMSS, decay_kind=enums.DecayKind.POLYNOMIAL, runs=1)
    rows = list(experiment.run_experiment(config))

    assert len(rows) == 1
    assert rows[0].algo == "fdcmss"


def test_file_stream(tmp_path):
    """Test an experiment on an item file.
    """
    path = tmp_path / 'items.txt'
    path.write_text("1 2 1\n1 3\n" * 50)
    config = factories.ExperimentConfigFactory(zipf=None, input_path=path, runs=1, phi=0.4, epsilon=0.05)
    rows = list(experiment.run_experiment(config))

    assert len(rows) == 2
    for row in rows:
        assert row.n == 250
        assert row.rho is None
        assert row.recall == 1
    assert models.ExperimentRow.header().index('rho') == 3
    assert rows[0].csv_row()[3] == ''


def test_empty_file(tmp_path):
    """Test that an empty item file is rejected.
    """
    path = tmp_path / 'empty.txt'
    path.write_text("\n")
    config = factories.ExperimentConfigFactory(zipf=None, input_path=path, runs=1)

    with pytest.raises(exceptions.InputError):
        list(experiment.run_experiment(config))


def test_snapshots(tmp_path):
    """Test that the FDCMSS sketches are written to the snapshot directory.
    """
    snapshot_dir = tmp_path / 'snapshots'
    config = factories.ExperimentConfigFactory(algorithms=enums.AlgorithmSelection.FDCMSS, snapshot_dir=snapshot_dir)
    list(experiment.run_experiment(config))

    assert sorted(path.name for path in snapshot_dir.iterdir()) == [
        f"fdcmss-0-{config.seed}.fdc", f"fdcmss-0-{config.seed + 1}.fdc"]


def test_configuration():
    """Test that inconsistent configurations are rejected.
    """
    with pytest.raises(pydantic.ValidationError):
        factories.ExperimentConfigFactory(zipf=None)
    with pytest.raises(pydantic.ValidationError):
        factories.ExperimentConfigFactory(sweep=enums.SweepVariable.RHO)


def test_equal_budget():
    """Test that with the same memory FDCMSS is more accurate and faster than λ-HCount in most paired runs.
    """
    config = factories.ExperimentConfigFactory(
        zipf=factories.ZipfSpecFactory(n=20_000, rho=1.1), runs=20, sketch_kb=64, timing=True)
    rows = list(experiment.run_experiment(config))
    pairs = list(zip(rows[::2], rows[1::2]))

    assert len(pairs) == 20
    assert all((fdcmss.algo, lhcount.algo) == ('fdcmss', 'lhcount') for fdcmss, lhcount in pairs)
    assert all(fdcmss.seed == lhcount.seed for fdcmss, lhcount in pairs)
    assert sum(fdcmss.mae <= lhcount.mae for fdcmss, lhcount in pairs) >= 16
    # Timing sensitive, so only the medians are compared
    assert statistics.median(row.upd_per_ms for row, _ in pairs) >= statistics.median(
        row.upd_per_ms for _, row in pairs)
