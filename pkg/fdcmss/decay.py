"""Forward decay functions.

A forward decay function ``g`` weighs an item arriving at ``t_i`` with ``g(t_i - L)``, where ``L`` is the landmark
time. The weight measured at time ``t`` is normalized by ``g(t - L)``. Raw weights are what sketches store; the
normalization happens at query time.
"""
import math

from fdcmss import enums, exceptions, models


def growth(spec: models.DecaySpec, age: float) -> float:
    """Evaluate g at the given age.

    :param spec: The decay function.
    :param age: The age relative to the landmark, negative only for exponential decay.
    :return: The value g(age).
    """
    try:
        match spec.kind:
            case enums.DecayKind.EXPONENTIAL:
                value = math.exp(age * -math.log(spec.parameter))
            case enums.DecayKind.POLYNOMIAL:
                value = math.pow(age, spec.parameter)
            case _:
                raise NotImplementedError()
    except OverflowError as ex:
        raise exceptions.DecayOverflowError(f"g({age}) overflows for {spec.kind.description}") from ex
    if not math.isfinite(value):
        raise exceptions.DecayOverflowError(f"g({age}) is not finite for {spec.kind.description}")

    return value


def raw_weight(spec: models.DecaySpec, t_i: float) -> float:
    """Return the unnormalized weight g(t_i - L) of an item.

    :param spec: The decay function.
    :param t_i: The item timestamp.
    :return: The raw weight.
    """
    if t_i < spec.landmark:
        raise exceptions.DecayDomainError(f"Timestamp {t_i} precedes the landmark {spec.landmark}")

    return growth(spec, t_i - spec.landmark)


def item_weight(spec: models.DecaySpec, t_i: float, origin: float) -> float:
    """Return the raw weight of an item for a sketch that started at the origin time. Once an exponential decay has been
    rebased, items between the origin and the landmark are still valid and weigh (1/λ)^(t_i - L) < 1.

    :param spec: The decay function.
    :param t_i: The item timestamp.
    :param origin: The earliest valid timestamp, the landmark before any rebase.
    :return: The raw weight.
    """
    if t_i < origin:
        raise exceptions.DecayDomainError(f"Timestamp {t_i} precedes the initial landmark {origin}")
    if spec.kind == enums.DecayKind.EXPONENTIAL:
        return growth(spec, t_i - spec.landmark)

    return raw_weight(spec, t_i)


def normalized_weight(spec: models.DecaySpec, t_i: float, t: float) -> float:
    """Return the forward decayed weight g(t_i - L) / g(t - L) of an item measured at time t.

    :param spec: The decay function.
    :param t_i: The item timestamp.
    :param t: The measurement time.
    :return: The weight, in [0, 1].
    """
    if t_i > t:
        raise exceptions.DecayDomainError(f"Timestamp {t_i} is after the measurement time {t}")
    if t_i == t:
        return 1.0
    if spec.kind == enums.DecayKind.EXPONENTIAL:
        # Equal to λ^(t - t_i), which never overflows
        return math.pow(spec.parameter, t - t_i)

    return raw_weight(spec, t_i) / raw_weight(spec, t)


def rebase_factor(spec: models.DecaySpec, new_landmark: float) -> float:
    """Return the factor λ^(new_landmark - L) that moves raw exponential weights to a later landmark.

    :param spec: The decay function.
    :param new_landmark: The new landmark.
    :return: The factor, in (0, 1].
    """
    if spec.kind != enums.DecayKind.EXPONENTIAL:
        raise exceptions.UnsupportedOperationError(f"Rebasing is only exact for exponential decay, not {spec.kind}")
    if new_landmark < spec.landmark:
        raise exceptions.DecayDomainError(f"New landmark {new_landmark} precedes the landmark {spec.landmark}")

    return math.pow(spec.parameter, new_landmark - spec.landmark)


def rebased(spec: models.DecaySpec, new_landmark: float) -> models.DecaySpec:
    """Return the decay function moved to a new landmark.

    :param spec: The decay function.
    :param new_landmark: The new landmark.
    :return: The decay function with the new landmark.
    """
    return spec.model_copy(update={'landmark': new_landmark})


def needs_rebase(spec: models.DecaySpec, t_i: float, threshold: float) -> bool:
    """Check whether the raw weight of an item would exceed the rebase threshold.

    :param spec: The decay function.
    :param t_i: The item timestamp.
    :param threshold: The largest raw weight allowed.
    :return: True if the landmark should be moved before processing the item.
    """
    return (
        spec.kind == enums.DecayKind.EXPONENTIAL and
        (t_i - spec.landmark) * -math.log(spec.parameter) > math.log(threshold)
    )
