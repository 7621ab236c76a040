"""Experiment runner.

An experiment runs every selected algorithm over a stream for each sweep point and each run, comparing the answers with
the exact oracle. Runs are independent: run ``i`` of every sweep point uses the seed ``seed + i`` both for the stream
and for the sketch hashes, so that both algorithms always see the same stream.
"""
from collections.abc import Iterable, Iterator
import concurrent.futures
import csv
import dataclasses
import logging
import time
import typing

from fdcmss import enums, exceptions, generator, metrics, models, oracle, parser, sizing, snapshot
from fdcmss.sketch import FrequentItemsSketch, get_sketch_class

# The module logger
logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class RunTask:
    """One run of an experiment at one sweep point
    """
    config: models.ExperimentConfig
    point: int
    n: int | None
    phi: float
    rho: float | None
    sketch_kb: float | None
    seed: int
    stream: generator.Stream | None = None


def sweep_points(config: models.ExperimentConfig) -> list[dict[str, typing.Any]]:
    """Return the values of n, φ, ρ and the byte budget at every sweep point.

    :param config: The experiment configuration.
    :return: The values at each point.
    """
    base = {
        'n': config.zipf.n if config.zipf else None,
        'phi': config.phi,
        'rho': config.zipf.rho if config.zipf else None,
        'sketch_kb': config.sketch_kb,
    }
    if config.sweep is None:
        return [base]

    points = []
    for value in config.values:
        point = dict(base)
        match config.sweep:
            case enums.SweepVariable.N:
                point['n'] = int(value)
            case enums.SweepVariable.PHI:
                point['phi'] = value
            case enums.SweepVariable.RHO:
                point['rho'] = value
            case enums.SweepVariable.SKETCH_KB:
                point['sketch_kb'] = value
        points.append(point)

    return points


def tasks(config: models.ExperimentConfig) -> list[RunTask]:
    """Create the tasks of an experiment, point by point and run by run.

    :param config: The experiment configuration.
    :return: The tasks.
    """
    stream = None
    if config.input_path is not None:
        stream = parser.read_items(config.input_path)

    return [
        RunTask(config=config, point=index, seed=config.seed + run, stream=stream, **point)
        for index, point in enumerate(sweep_points(config))
        for run in range(config.runs)
    ]


def task_stream(task: RunTask) -> generator.Stream:
    """Return the stream of a task.

    :param task: The task.
    :return: The stream.
    """
    if task.stream is not None:
        return task.stream if task.n is None else task.stream.head(task.n)

    return generator.zipf_stream(models.ZipfSpec(
        n=task.n, rho=task.rho, universe=task.config.zipf.universe, seed=task.seed))


def distinct_items(config: models.ExperimentConfig, stream: generator.Stream) -> int:
    """Return the number of distinct items M used to size λ-HCount.

    :param config: The experiment configuration.
    :param stream: The stream.
    :return: The number of distinct items.
    """
    if config.distinct is not None:
        return config.distinct
    if config.zipf is not None:
        return config.zipf.universe

    return max(1, len(set(stream.items.tolist())))


def decay_spec(config: models.ExperimentConfig) -> models.DecaySpec:
    """Return the decay function of FDCMSS and of the oracle.

    :param config: The experiment configuration.
    :return: The decay function.
    """
    match config.decay_kind:
        case enums.DecayKind.EXPONENTIAL:
            return models.DecaySpec.exponential(config.lam, config.landmark)
        case enums.DecayKind.POLYNOMIAL:
            return models.DecaySpec.polynomial(config.beta, config.landmark)
        case _:
            raise NotImplementedError()


def create_sketch(
        algorithm: enums.Algorithm, task: RunTask, stream: generator.Stream
) -> FrequentItemsSketch:
    """Create the sketch of an algorithm for a task. With a byte budget, each algorithm keeps the rows its theory asks
    for and gets as many columns as fit the budget.

    :param algorithm: The algorithm.
    :param task: The task.
    :param stream: The stream.
    :return: The sketch.
    """
    config = task.config
    budget = None if task.sketch_kb is None else task.sketch_kb * sizing.KB
    sketch_class = get_sketch_class(algorithm)
    match algorithm:
        case enums.Algorithm.FDCMSS:
            params = models.SketchParams(
                epsilon=config.epsilon, delta=config.delta, phi=task.phi, decay=decay_spec(config))
            if budget is None:
                return sketch_class(params, seed=task.seed)
            dimensions = sizing.fdcmss_dimensions_for_budget(budget, config.delta)
            return sketch_class(params, seed=task.seed, rows=dimensions.rows, columns=dimensions.columns)
        case enums.Algorithm.LAMBDA_HCOUNT:
            distinct = distinct_items(config, stream)
            if budget is None:
                lh = sizing.lh_sizing(config.lam, distinct, config.probability, config.epsilon)
                rows, columns = lh.rows, lh.columns
            else:
                rows, columns = sizing.lh_dimensions_for_budget(budget, distinct, config.probability)
            params = models.LambdaHCountParams(
                lam=config.lam, support=task.phi if config.support is None else config.support,
                epsilon=config.epsilon, rows=rows, columns=columns)
            return sketch_class(params, seed=task.seed)
        case _:
            raise NotImplementedError()


def execute_run(task: RunTask) -> list[models.ExperimentRow]:
    """Execute one run: feed the stream to every algorithm and to the oracle, query just after the last item and
    compare. Only the update loop is timed.

    :param task: The task.
    :return: One row for each algorithm.
    """
    config = task.config
    stream = task_stream(task)
    if len(stream) == 0:
        raise exceptions.InputError("Cannot run an experiment on an empty stream")

    exact_counts = oracle.ExactDecayedCounts(decay_spec(config))
    for item, t in stream:
        exact_counts.process(item, t)
    query_time = stream.final_timestamp + 1
    exact = exact_counts.normalized_counts(query_time)
    support = task.phi if config.support is None else config.support

    rows = []
    for algorithm in config.algorithms.algorithms:
        sketch = create_sketch(algorithm, task, stream)
        truth = exact_counts.frequent(support if algorithm == enums.Algorithm.LAMBDA_HCOUNT else task.phi, query_time)
        start = time.perf_counter()
        for item, t in stream:
            sketch.process(item, t)
        elapsed_ms = (time.perf_counter() - start) * 1000

        start = time.perf_counter()
        reported = sketch.query(query_time)
        logger.info(
            "%s run %s at point %s: %s items reported, query took %.3f ms", algorithm.description, task.seed,
            task.point, len(reported), (time.perf_counter() - start) * 1000
        )
        estimates = {item: sketch.point_estimate(item, query_time) for item in exact}
        report = metrics.compute_metrics(
            reported=reported, truth=truth, exact=exact, estimates=estimates, elapsed_ms=elapsed_ms,
            n_updates=len(stream)
        )
        if config.snapshot_dir is not None and algorithm == enums.Algorithm.FDCMSS:
            snapshot.dump(sketch, config.snapshot_dir / f"fdcmss-{task.point}-{task.seed}.fdc")

        rows.append(models.ExperimentRow(
            algo=algorithm.value,
            n=len(stream),
            phi=task.phi,
            rho=task.rho,
            sketch_kb=sketch.memory_bytes / sizing.KB,
            seed=task.seed,
            recall=report.recall,
            precision=report.precision,
            mae=report.mean_abs_err,
            maxae=report.max_abs_err,
            p96ae=report.p96_abs_err,
            upd_per_ms=report.updates_per_ms if config.timing else 0.0,
        ))

    return rows


def run_experiment(config: models.ExperimentConfig) -> Iterator[models.ExperimentRow]:
    """Run an experiment. Rows come out in point, run and algorithm order whatever the number of jobs.

    :param config: The experiment configuration.
    :return: The rows, one for each run and algorithm.
    """
    if config.snapshot_dir is not None:
        config.snapshot_dir.mkdir(parents=True, exist_ok=True)
    run_tasks = tasks(config)
    logger.info("Running %s runs with %s jobs", len(run_tasks), config.jobs)

    if config.jobs == 1:
        for task in run_tasks:
            yield from execute_run(task)
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=config.jobs) as executor:
            for rows in executor.map(execute_run, run_tasks):
                yield from rows


def write_csv(rows: Iterable[models.CsvRow], file: typing.TextIO, row_type: type[models.CsvRow]):
    """Write rows as CSV, header first.

    :param rows: The rows.
    :param file: The file.
    :param row_type: The row model, which gives the column names.
    """
    writer = csv.writer(file, lineterminator="\n")
    writer.writerow(row_type.header())
    for row in rows:
        writer.writerow(row.csv_row())
