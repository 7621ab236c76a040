"""The application models.
"""
import pathlib

import pydantic

from fdcmss import enums, settings


class DecaySpec(pydantic.BaseModel):
    """The forward decay function model. The parameter is the fading factor λ for exponential decay and the exponent β
    for polynomial decay.
    """
    model_config = pydantic.ConfigDict(frozen=True)

    kind: enums.DecayKind = pydantic.Field(title="The decay function kind")
    parameter: float = pydantic.Field(title="The fading factor λ or the exponent β")
    landmark: float = pydantic.Field(default=0.0, title="The landmark time L")

    @pydantic.model_validator(mode='after')
    def check_parameter(self) -> 'DecaySpec':
        """Check the decay parameter against the decay kind.

        :return: The validated model.
        """
        match self.kind:
            case enums.DecayKind.EXPONENTIAL:
                if not 0 < self.parameter < 1:
                    raise ValueError(f"The fading factor must be in (0, 1), got {self.parameter}")
            case enums.DecayKind.POLYNOMIAL:
                if not self.parameter > 0:
                    raise ValueError(f"The exponent must be positive, got {self.parameter}")

        return self

    @classmethod
    def exponential(cls, lam: float = settings.DEFAULT_LAMBDA, landmark: float = 0.0) -> 'DecaySpec':
        """Create an exponential decay g(n) = (1/λ)^n.

        :param lam: The fading factor λ.
        :param landmark: The landmark time.
        :return: The decay.
        """
        return cls(kind=enums.DecayKind.EXPONENTIAL, parameter=lam, landmark=landmark)

    @classmethod
    def polynomial(cls, beta: float = settings.DEFAULT_BETA, landmark: float = 0.0) -> 'DecaySpec':
        """Create a polynomial decay g(n) = n^β.

        :param beta: The exponent β.
        :param landmark: The landmark time.
        :return: The decay.
        """
        return cls(kind=enums.DecayKind.POLYNOMIAL, parameter=beta, landmark=landmark)


class SketchParams(pydantic.BaseModel):
    """The FDCMSS sketch parameters model. When the initial timestamp is not given, the landmark of the decay is used.
    """
    epsilon: float = pydantic.Field(gt=0, lt=1, title="The error bound ε")
    delta: float = pydantic.Field(gt=0, lt=1, title="The probability of failure δ")
    phi: float = pydantic.Field(gt=0, lt=1, title="The support threshold φ")
    decay: DecaySpec = pydantic.Field(default_factory=DecaySpec.exponential, title="The decay function")
    t_init: float | None = pydantic.Field(default=None, title="The initial timestamp, used as landmark")

    @pydantic.model_validator(mode='after')
    def check_thresholds(self) -> 'SketchParams':
        """Check that the error is below the threshold and align the landmark with the initial timestamp.

        :return: The validated model.
        """
        if self.epsilon >= self.phi:
            raise ValueError(f"The error {self.epsilon} must be less than the threshold {self.phi}")
        if self.t_init is None:
            self.t_init = self.decay.landmark
        elif self.t_init != self.decay.landmark:
            self.decay = self.decay.model_copy(update={'landmark': self.t_init})

        return self


class LambdaHCountParams(pydantic.BaseModel):
    """The λ-HCount parameters model.
    """
    lam: float = pydantic.Field(gt=0, lt=1, title="The fading factor λ")
    support: float = pydantic.Field(gt=0, lt=1, title="The support threshold s")
    epsilon: float = pydantic.Field(gt=0, lt=1, title="The error bound ε")
    rows: int = pydantic.Field(ge=1, title="The number of rows r")
    columns: int = pydantic.Field(ge=1, title="The number of columns m")

    @pydantic.model_validator(mode='after')
    def check_support(self) -> 'LambdaHCountParams':
        """Check that the error is below the support.

        :return: The validated model.
        """
        if self.epsilon >= self.support:
            raise ValueError(f"The error {self.epsilon} must be less than the support {self.support}")

        return self


class FrequentItem(pydantic.BaseModel):
    """The frequent item model.
    """
    model_config = pydantic.ConfigDict(frozen=True)

    item: int = pydantic.Field(ge=0, title="The item")
    estimate: float = pydantic.Field(title="The normalized decayed count estimate")


class ZipfSpec(pydantic.BaseModel):
    """The synthetic Zipf stream model.
    """
    model_config = pydantic.ConfigDict(frozen=True)

    n: int = pydantic.Field(ge=1, title="The number of items")
    rho: float = pydantic.Field(ge=0, title="The skew of the distribution")
    universe: int = pydantic.Field(ge=1, le=2 ** 32, title="The number of distinct items that can be drawn")
    seed: int = pydantic.Field(ge=0, lt=2 ** 64, title="The seed of the pseudo-random number generator")


class DatasetStats(pydantic.BaseModel):
    """The dataset statistics model.
    """
    count: int = pydantic.Field(ge=1, title="The number of items")
    distinct: int = pydantic.Field(ge=1, title="The number of distinct items")
    minimum: float = pydantic.Field(title="The minimum item")
    maximum: float = pydantic.Field(title="The maximum item")
    mean: float = pydantic.Field(title="The mean")
    median: float = pydantic.Field(title="The median")
    stddev: float = pydantic.Field(ge=0, title="The population standard deviation")
    skewness: float = pydantic.Field(title="The population skewness")

    def as_reference(self) -> dict[str, float]:
        """Return the statistics keyed as in the published reference table.

        :return: The statistics.
        """
        return {
            'count': self.count, 'distinct': self.distinct, 'min': self.minimum, 'max': self.maximum,
            'mean': self.mean, 'median': self.median, 'stddev': self.stddev, 'skewness': self.skewness,
        }


class MetricsReport(pydantic.BaseModel):
    """The metrics of one experiment run.
    """
    recall: float = pydantic.Field(ge=0, le=1, title="True frequent items reported over true frequent items")
    precision: float = pydantic.Field(ge=0, le=1, title="True frequent items reported over items reported")
    mean_abs_err: float = pydantic.Field(ge=0, title="The mean absolute error")
    max_abs_err: float = pydantic.Field(ge=0, title="The max absolute error")
    p96_abs_err: float = pydantic.Field(ge=0, title="The 96th percentile absolute error")
    updates_per_ms: float = pydantic.Field(ge=0, title="The updates per millisecond")
    recall_defined: bool = pydantic.Field(default=True, title="False when there were no true frequent items")


class CsvRow(pydantic.BaseModel):
    """Base model for the rows written as CSV. The field order is the column order.
    """
    @classmethod
    def header(cls) -> list[str]:
        """Return the CSV column names.

        :return: The column names.
        """
        return list(cls.model_fields)

    def csv_row(self) -> list[str]:
        """Return the row as CSV values. Floats keep ten significant digits and missing values are empty.

        :return: The CSV values.
        """
        return [
            '' if value is None else (format(value, '.10g') if isinstance(value, float) else str(value))
            for value in self.model_dump().values()
        ]


class ExperimentRow(CsvRow):
    """One CSV row of an experiment.
    """
    algo: str = pydantic.Field(title="The algorithm")
    n: int = pydantic.Field(title="The stream length")
    phi: float = pydantic.Field(title="The support threshold")
    rho: float | None = pydantic.Field(title="The skew, empty for file streams")
    sketch_kb: float = pydantic.Field(title="The sketch size in kilobytes")
    seed: int = pydantic.Field(title="The seed of the run")
    recall: float = pydantic.Field(title="The recall")
    precision: float = pydantic.Field(title="The precision")
    mae: float = pydantic.Field(title="The mean absolute error")
    maxae: float = pydantic.Field(title="The max absolute error")
    p96ae: float = pydantic.Field(title="The 96th percentile absolute error")
    upd_per_ms: float = pydantic.Field(title="The updates per millisecond")


class SizingRow(CsvRow):
    """One point of the theoretical sketch size curves.
    """
    variable: str = pydantic.Field(title="The variable name")
    value: float = pydantic.Field(title="The variable value")
    fdcmss_cells: float = pydantic.Field(title="The FDCMSS cells")
    fdcmss_kb: float = pydantic.Field(title="The FDCMSS sketch size in kilobytes")
    lhcount_cells: float = pydantic.Field(title="The λ-HCount cells")
    lhcount_kb: float = pydantic.Field(title="The λ-HCount sketch size in kilobytes")


class ExperimentConfig(pydantic.BaseModel):
    """The experiment configuration model. The stream comes either from a Zipf specification or from an item file.
    """
    algorithms: enums.AlgorithmSelection = pydantic.Field(
        default=enums.AlgorithmSelection.BOTH, title="The algorithms to run")
    zipf: ZipfSpec | None = pydantic.Field(default=None, title="The synthetic stream")
    input_path: pathlib.Path | None = pydantic.Field(default=None, title="The item file")
    sweep: enums.SweepVariable | None = pydantic.Field(default=None, title="The sweep variable")
    values: list[float] = pydantic.Field(default_factory=list, title="The sweep values")
    runs: int = pydantic.Field(default=settings.RUNS_PER_POINT, ge=1, title="The runs for each sweep point")
    decay_kind: enums.DecayKind = pydantic.Field(default=enums.DecayKind.EXPONENTIAL, title="The FDCMSS decay")
    lam: float = pydantic.Field(default=settings.DEFAULT_LAMBDA, gt=0, lt=1, title="The fading factor λ")
    beta: float = pydantic.Field(default=settings.DEFAULT_BETA, gt=0, title="The polynomial exponent β")
    landmark: float = pydantic.Field(default=0.0, title="The landmark time")
    epsilon: float = pydantic.Field(default=settings.DEFAULT_EPSILON, gt=0, lt=1, title="The error bound ε")
    delta: float = pydantic.Field(default=settings.DEFAULT_DELTA, gt=0, lt=1, title="The probability of failure δ")
    phi: float = pydantic.Field(default=settings.DEFAULT_PHI, gt=0, lt=1, title="The support threshold φ")
    support: float | None = pydantic.Field(
        default=None, gt=0, lt=1, title="The λ-HCount support s, the threshold φ when not given")
    probability: float = pydantic.Field(
        default=settings.DEFAULT_PROBABILITY, gt=0, lt=1, title="The λ-HCount success probability p")
    distinct: int | None = pydantic.Field(
        default=None, ge=1, title="The number of distinct items M, the Zipf universe when not given")
    sketch_kb: float | None = pydantic.Field(
        default=None, gt=0, title="The byte budget in kilobytes shared by both algorithms")
    seed: int = pydantic.Field(default=settings.DEFAULT_SEED, ge=0, title="The master seed")
    jobs: int = pydantic.Field(default=settings.JOBS, ge=1, title="The maximum number of parallel runs")
    timing: bool = pydantic.Field(default=True, title="Measure the updates per millisecond")
    snapshot_dir: pathlib.Path | None = pydantic.Field(default=None, title="Directory for FDCMSS snapshots")

    @pydantic.model_validator(mode='after')
    def check_source(self) -> 'ExperimentConfig':
        """Check the consistency of the configuration.

        :return: The validated model.
        """
        if (self.zipf is None) == (self.input_path is None):
            raise ValueError("Exactly one of a Zipf stream or an item file must be given")
        if self.sweep is not None and not self.values:
            raise ValueError(f"Sweeping {self.sweep.value} requires at least one value")
        if self.sweep == enums.SweepVariable.RHO and self.zipf is None:
            raise ValueError("Sweeping the skew requires a Zipf stream")
        if (
                enums.Algorithm.LAMBDA_HCOUNT in self.algorithms.algorithms and
                self.decay_kind != enums.DecayKind.EXPONENTIAL
        ):
            raise ValueError("λ-HCount runs require exponential decay")

        return self
