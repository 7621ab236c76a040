"""Sketch sizing arithmetic.

FDCMSS uses d = ⌈ln 1/δ⌉ rows and w = ⌈e/2ε⌉ columns, while the unceiled product ln(1/δ)·e/(2ε) gives the
theoretical number of cells. λ-HCount needs e(1-λ)ln(-M/ln p)/ε² cells split over r = ⌈ln(-M/ln p)⌉ rows.
"""
from collections.abc import Iterable
import logging
import math
import typing

from fdcmss import enums, exceptions, models

# The module logger
logger = logging.getLogger(__name__)

# Bytes in a kilobyte
KB = 1024


class Dimensions(typing.NamedTuple):
    """The dimensions of a sketch
    """
    rows: int
    columns: int

    @property
    def cells(self) -> int:
        """Return the number of cells.

        :return: The number of cells.
        """
        return self.rows * self.columns


class LambdaHCountSizing(typing.NamedTuple):
    """The λ-HCount sketch sizing
    """
    rows: int
    columns: int
    cells: int


def _check_unit_interval(**kwargs: float):
    """Check that all the arguments lie in (0, 1).

    :param kwargs: The arguments by name.
    """
    for name, value in kwargs.items():
        if not 0 < value < 1:
            raise exceptions.ConfigurationError(f"{name} must be in (0, 1), got {value}")


def fdcmss_dimensions(epsilon: float, delta: float) -> Dimensions:
    """Return the FDCMSS sketch dimensions.

    :param epsilon: The error bound ε.
    :param delta: The probability of failure δ.
    :return: The dimensions d × w.
    """
    _check_unit_interval(epsilon=epsilon, delta=delta)

    return Dimensions(rows=fdcmss_rows(delta), columns=math.ceil(math.e / (2 * epsilon)))


def fdcmss_rows(delta: float) -> int:
    """Return the number of FDCMSS rows d = ⌈ln 1/δ⌉, at least one.

    :param delta: The probability of failure δ.
    :return: The number of rows.
    """
    _check_unit_interval(delta=delta)

    return max(1, math.ceil(math.log(1 / delta) - 1e-12))


def theoretical_cells_fdcmss(epsilon: float, delta: float) -> float:
    """Return the unceiled number of FDCMSS cells ln(1/δ)·e/(2ε).

    :param epsilon: The error bound ε.
    :param delta: The probability of failure δ.
    :return: The number of cells.
    """
    return math.log(1 / delta) * math.e / (2 * epsilon)


def optimal_width(epsilon: float) -> float:
    """Return the width e/(2ε) that minimizes the sketch area for a given error.

    :param epsilon: The error bound ε.
    :return: The width.
    """
    return math.e / (2 * epsilon)


def rows_for_width(delta: float, width: float, epsilon: float) -> float:
    """Return the number of rows ln(1/δ)/ln(2wε) needed by an arbitrary width.

    :param delta: The probability of failure δ.
    :param width: The width.
    :param epsilon: The error bound ε.
    :return: The number of rows.
    """
    if 2 * width * epsilon <= 1:
        raise exceptions.ConfigurationError(f"The width {width} is too small for the error {epsilon}")

    return math.log(1 / delta) / math.log(2 * width * epsilon)


def success_probability(phi: float, width: int, rows: int) -> float:
    """Return the probability 1 - (1/(2φw))^d that a frequent item is a majority candidate in one of its cells. The
    bound is vacuous when it is not positive.

    :param phi: The support threshold φ.
    :param width: The number of columns w.
    :param rows: The number of rows d.
    :return: The probability bound.
    """
    bound = 1 - (1 / (2 * phi * width)) ** rows
    if bound <= 0:
        logger.warning("Vacuous success probability bound %s for φ=%s, w=%s, d=%s", bound, phi, width, rows)

    return bound


def lh_sizing(lam: float, distinct: int, probability: float, epsilon: float) -> LambdaHCountSizing:
    """Return the λ-HCount sketch sizing.

    :param lam: The fading factor λ.
    :param distinct: The number of distinct items M.
    :param probability: The success probability p.
    :param epsilon: The error bound ε.
    :return: The rows, columns and cells.
    """
    _check_unit_interval(lam=lam, probability=probability)
    if epsilon <= 0 or distinct < 1:
        raise exceptions.ConfigurationError(f"Invalid error {epsilon} or number of distinct items {distinct}")
    log_term = lh_log_term(distinct, probability)
    cells = math.ceil(math.e * (1 - lam) * log_term / epsilon ** 2)
    rows = max(1, math.ceil(log_term))

    return LambdaHCountSizing(rows=rows, columns=math.ceil(cells / rows), cells=cells)


def lh_log_term(distinct: int, probability: float) -> float:
    """Return ln(-M/ln p), which is also the number of λ-HCount hash functions before rounding.

    :param distinct: The number of distinct items M.
    :param probability: The success probability p.
    :return: The logarithm.
    """
    _check_unit_interval(probability=probability)

    return math.log(-distinct / math.log(probability))


def lh_theoretical_cells(lam: float, distinct: int, probability: float, epsilon: float) -> float:
    """Return the unceiled number of λ-HCount cells e(1-λ)ln(-M/ln p)/ε².

    :param lam: The fading factor λ.
    :param distinct: The number of distinct items M.
    :param probability: The success probability p.
    :param epsilon: The error bound ε.
    :return: The number of cells.
    """
    return math.e * (1 - lam) * lh_log_term(distinct, probability) / epsilon ** 2


def fdcmss_dimensions_for_budget(budget_bytes: float, delta: float) -> Dimensions:
    """Return the FDCMSS dimensions that fit a byte budget: d from δ, then the widest rows that fit.

    :param budget_bytes: The budget in bytes.
    :param delta: The probability of failure δ.
    :return: The dimensions.
    """
    rows = fdcmss_rows(delta)
    columns = int(budget_bytes // (enums.Algorithm.FDCMSS.bytes_per_cell * rows))
    if columns < 1:
        raise exceptions.ConfigurationError(f"A budget of {budget_bytes} bytes cannot hold {rows} FDCMSS rows")

    return Dimensions(rows=rows, columns=columns)


def lh_dimensions_for_budget(budget_bytes: float, distinct: int, probability: float) -> Dimensions:
    """Return the λ-HCount dimensions that fit a byte budget: r from M and p, then the widest rows that fit.

    :param budget_bytes: The budget in bytes.
    :param distinct: The number of distinct items M.
    :param probability: The success probability p.
    :return: The dimensions.
    """
    rows = max(1, math.ceil(lh_log_term(distinct, probability)))
    columns = int(budget_bytes // (enums.Algorithm.LAMBDA_HCOUNT.bytes_per_cell * rows))
    if columns < 1:
        raise exceptions.ConfigurationError(f"A budget of {budget_bytes} bytes cannot hold {rows} λ-HCount rows")

    return Dimensions(rows=rows, columns=columns)


def sizing_table(
        variable: enums.SizingVariable, values: Iterable[float], lam: float, distinct: int, probability: float,
        epsilon: float
) -> list[models.SizingRow]:
    """Return the theoretical sketch sizes of both algorithms as one variable changes. FDCMSS targets the same success
    probability with δ = 1 - p.

    :param variable: The variable changed.
    :param values: The values of the variable.
    :param lam: The fading factor λ.
    :param distinct: The number of distinct items M.
    :param probability: The success probability p, when fixed.
    :param epsilon: The error bound ε, when fixed.
    :return: One row for each value.
    """
    rows = []
    for value in values:
        match variable:
            case enums.SizingVariable.PROBABILITY:
                p, eps = value, epsilon
            case enums.SizingVariable.EPSILON:
                p, eps = probability, value
            case _:
                raise NotImplementedError()
        fdcmss_cells = theoretical_cells_fdcmss(eps, 1 - p)
        lhcount_cells = lh_theoretical_cells(lam, distinct, p, eps)
        rows.append(models.SizingRow(
            variable=variable.value, value=value,
            fdcmss_cells=fdcmss_cells, fdcmss_kb=fdcmss_cells * enums.Algorithm.FDCMSS.bytes_per_cell / KB,
            lhcount_cells=lhcount_cells,
            lhcount_kb=lhcount_cells * enums.Algorithm.LAMBDA_HCOUNT.bytes_per_cell / KB,
        ))

    return rows


def value_range(start: float, end: float, steps: int) -> list[float]:
    """Return evenly spaced values, both ends included.

    :param start: The first value.
    :param end: The last value.
    :param steps: The number of values.
    :return: The values.
    """
    if steps < 2:
        return [start]

    return [start + (end - start) * index / (steps - 1) for index in range(steps)]
