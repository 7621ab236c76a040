"""Command to run an experiment and write one CSV row for each run and algorithm.
"""
import argparse
import pathlib

from fdcmss import enums, experiment, models, settings
from fdcmss.commands import output


def parse_values(values: str) -> list[float]:
    """Parse the sweep values argument.

    :param values: Comma separated values.
    :return: The values.
    """
    try:
        return [float(value) for value in values.split(',') if value]
    except ValueError as exc:
        raise argparse.ArgumentTypeError("Could not parse sweep values") from exc


def add_arguments(arg_parser: argparse.ArgumentParser):
    """Add the command arguments.

    :param arg_parser: The command parser.
    """
    arg_parser.add_argument('--algorithm', type=enums.AlgorithmSelection, default=enums.AlgorithmSelection.BOTH,
                            help=f"The algorithms to run. Available selections are "
                                 f"{','.join(selection.value for selection in enums.AlgorithmSelection)}")
    arg_parser.add_argument('--in', dest='input', type=pathlib.Path,
                            help="Replay an item file instead of a Zipf stream")
    arg_parser.add_argument('--n', type=int, default=settings.DEFAULT_N, help="The number of Zipf items")
    arg_parser.add_argument('--rho', type=float, default=settings.DEFAULT_RHO, help="The Zipf skew")
    arg_parser.add_argument('--universe', type=int, default=settings.DEFAULT_UNIVERSE,
                            help="The number of distinct Zipf items")
    arg_parser.add_argument('--sweep', type=enums.SweepVariable,
                            help=f"The variable to sweep. Available variables are "
                                 f"{','.join(variable.value for variable in enums.SweepVariable)}")
    arg_parser.add_argument('--values', type=parse_values, default=[], help="Comma separated sweep values")
    arg_parser.add_argument('--runs', type=int, default=settings.RUNS_PER_POINT, help="The runs for each point")
    arg_parser.add_argument('--decay', type=enums.DecayKind, default=enums.DecayKind.EXPONENTIAL,
                            help=f"The FDCMSS decay function. Available functions are "
                                 f"{','.join(kind.value for kind in enums.DecayKind)}")
    arg_parser.add_argument('--lambda', dest='lam', type=float, default=settings.DEFAULT_LAMBDA,
                            help="The fading factor")
    arg_parser.add_argument('--beta', type=float, default=settings.DEFAULT_BETA, help="The polynomial exponent")
    arg_parser.add_argument('--landmark', type=float, default=0.0, help="The landmark time")
    arg_parser.add_argument('--epsilon', type=float, default=settings.DEFAULT_EPSILON, help="The error bound")
    arg_parser.add_argument('--delta', type=float, default=settings.DEFAULT_DELTA,
                            help="The FDCMSS probability of failure")
    arg_parser.add_argument('--phi', type=float, default=settings.DEFAULT_PHI, help="The support threshold")
    arg_parser.add_argument('--support', type=float, help="The λ-HCount support, the threshold when not given")
    arg_parser.add_argument('--prob', type=float, default=settings.DEFAULT_PROBABILITY,
                            help="The λ-HCount success probability")
    arg_parser.add_argument('--distinct', type=int,
                            help="The number of distinct items used to size λ-HCount, the universe when not given")
    arg_parser.add_argument('--sketch-kb', type=float, help="The sketch size in kilobytes of both algorithms")
    arg_parser.add_argument('--snapshot-dir', type=pathlib.Path, help="Write the FDCMSS sketches to this directory")
    arg_parser.add_argument('--no-timing', dest='timing', default=True, action='store_false',
                            help="Write zero updates per millisecond, so that the output is reproducible")


def create_config(args: argparse.Namespace) -> models.ExperimentConfig:
    """Create the experiment configuration from the command line arguments.

    :param args: The command line arguments.
    :return: The experiment configuration.
    """
    zipf = None
    if args.input is None:
        zipf = models.ZipfSpec(n=args.n, rho=args.rho, universe=args.universe, seed=args.seed)

    return models.ExperimentConfig(
        algorithms=args.algorithm, zipf=zipf, input_path=args.input, sweep=args.sweep, values=args.values,
        runs=args.runs, decay_kind=args.decay, lam=args.lam, beta=args.beta, landmark=args.landmark,
        epsilon=args.epsilon, delta=args.delta, phi=args.phi, support=args.support, probability=args.prob,
        distinct=args.distinct, sketch_kb=args.sketch_kb, seed=args.seed, jobs=args.jobs, timing=args.timing,
        snapshot_dir=args.snapshot_dir,
    )


def handle(args: argparse.Namespace) -> enums.ExitCode:
    """Run the experiment.

    :param args: The command line arguments.
    :return: The exit code.
    """
    config = create_config(args)
    with output(args.out) as file:
        experiment.write_csv(experiment.run_experiment(config), file, models.ExperimentRow)

    return enums.ExitCode.OK
