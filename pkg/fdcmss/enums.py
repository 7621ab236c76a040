"""The project enums
"""
import enum


class DecayKind(enum.Enum):
    """Enumeration for the forward decay functions
    """
    EXPONENTIAL = 'exp', "Exponential g(n) = (1/λ)^n", 1
    POLYNOMIAL = 'poly', "Polynomial g(n) = n^β", 2

    def __new__(cls, value: str, description: str, code: int):
        """Creates the enum.

        :param value: The enum value.
        :param description: The description.
        :param code: The code used for the decay function in sketch snapshots.
        """
        obj = object.__new__(cls)
        obj._value_ = value
        obj.description = description
        obj.code = code

        return obj

    @classmethod
    def from_code(cls, code: int) -> 'DecayKind':
        """Get the decay kind from its snapshot code.

        :param code: The snapshot code.
        :return: The decay kind.
        """
        for kind in cls:
            if kind.code == code:
                return kind

        raise ValueError(f"Unknown decay code {code}")


class Algorithm(enum.Enum):
    """Enumeration for the frequent items algorithms
    """
    FDCMSS = 'fdcmss', "FDCMSS", 24
    LAMBDA_HCOUNT = 'lhcount', "λ-HCount", 16

    def __new__(cls, value: str, description: str, bytes_per_cell: int):
        """Creates the enum.

        :param value: The enum value.
        :param description: The description.
        :param bytes_per_cell: The number of bytes used by a sketch cell.
        """
        obj = object.__new__(cls)
        obj._value_ = value
        obj.description = description
        obj.bytes_per_cell = bytes_per_cell

        return obj


class AlgorithmSelection(enum.Enum):
    """Enumeration for the algorithms that an experiment runs
    """
    FDCMSS = 'fdcmss', (Algorithm.FDCMSS, )
    LAMBDA_HCOUNT = 'lhcount', (Algorithm.LAMBDA_HCOUNT, )
    BOTH = 'both', (Algorithm.FDCMSS, Algorithm.LAMBDA_HCOUNT)

    def __new__(cls, value: str, algorithms: tuple[Algorithm, ...]):
        """Creates the enum.

        :param value: The enum value.
        :param algorithms: The algorithms selected.
        """
        obj = object.__new__(cls)
        obj._value_ = value
        obj.algorithms = algorithms

        return obj


class SweepVariable(enum.Enum):
    """Enumeration for the experiment sweep variables
    """
    N = 'n'
    PHI = 'phi'
    RHO = 'rho'
    SKETCH_KB = 'sketch_kb'


class SizingVariable(enum.Enum):
    """Enumeration for the variable of the theoretical sizing curves
    """
    PROBABILITY = 'p', "Success probability", (0.70, 0.99)
    EPSILON = 'epsilon', "Error bound", (0.001, 0.01)

    def __new__(cls, value: str, description: str, default_range: tuple[float, float]):
        """Creates the enum.

        :param value: The enum value.
        :param description: The description.
        :param default_range: The default range of values plotted.
        """
        obj = object.__new__(cls)
        obj._value_ = value
        obj.description = description
        obj.default_range = default_range

        return obj


class InputFormat(enum.Enum):
    """Enumeration for the item file formats
    """
    INT_PER_TOKEN = 'int', "Whitespace separated non negative integers"

    def __new__(cls, value: str, description: str):
        """Creates the enum.

        :param value: The enum value.
        :param description: The description.
        """
        obj = object.__new__(cls)
        obj._value_ = value
        obj.description = description

        return obj


class Dataset(enum.Enum):
    """Enumeration for the public real datasets, with their published statistics
    """
    KOSARAK = 'kosarak', "Kosarak click-stream", 8019015, 41270, 1, 41270, 2387.2, 640, 4308.5, 3.5
    RETAIL = 'retail', "Retail market basket", 908576, 16470, 0, 16469, 3264.7, 1564, 4093.2, 1.5
    Q148 = 'q148', "KDD Cup 2000 request processing time", 234954, 11824, 0, 149464496, 3392.9, 63, 309782.5, 478.1
    WEBDOCS = 'webdocs', "Spidered web documents", 299887139, 5267656, 1, 5267656, 122715, 1988, 549736, 6.1

    def __new__(
            cls, value: str, description: str, count: int, distinct: int, minimum: int, maximum: int, mean: float,
            median: float, stddev: float, skewness: float
    ):
        """Creates the dataset enum.

        :param value: The enum value.
        :param description: The dataset description.
        :param count: The number of items.
        :param distinct: The number of distinct items.
        :param minimum: The minimum item.
        :param maximum: The maximum item.
        :param mean: The mean item.
        :param median: The median item.
        :param stddev: The standard deviation.
        :param skewness: The skewness.
        """
        obj = object.__new__(cls)
        obj._value_ = value
        obj.description = description
        obj.reference = {
            'count': count, 'distinct': distinct, 'min': minimum, 'max': maximum, 'mean': mean, 'median': median,
            'stddev': stddev, 'skewness': skewness,
        }

        return obj


class ExitCode(enum.IntEnum):
    """Enumeration for the command line exit codes
    """
    OK = 0
    CONFIGURATION_ERROR = 2
    INPUT_ERROR = 3
