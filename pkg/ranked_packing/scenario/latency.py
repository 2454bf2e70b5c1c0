from dataclasses import (
    dataclass,
)

from ranked_packing.consts import (
    FIBRE_REDUCTION_FACTOR,
    FRONTHAUL_LATENCY_BOUND,
    SPEED_OF_LIGHT,
)
from ranked_packing.exceptions import (
    ConfigurationError,
)
from ranked_packing.strings import (
    DISTANCE_ERROR,
    REDUCTION_FACTOR_ERROR,
)


@dataclass(frozen=True)
class LatencyModel:
    """
    Задержка фронтхола t = F * d / c и допустимая граница
    """
    reduction_factor: float = FIBRE_REDUCTION_FACTOR
    speed_of_light: float = SPEED_OF_LIGHT
    bound: float = FRONTHAUL_LATENCY_BOUND

    def __post_init__(self):
        if self.reduction_factor < 1:
            raise ConfigurationError(REDUCTION_FACTOR_ERROR.format(factor=self.reduction_factor))

    @property
    def max_distance_km(self) -> float:
        return self.bound * self.speed_of_light / self.reduction_factor / 1000


def fronthaul_latency(
    distance_km: float,
    model: LatencyModel = LatencyModel(),
) -> float:
    """
    Задержка в секундах для расстояния в километрах
    """
    if distance_km < 0:
        raise ConfigurationError(DISTANCE_ERROR.format(distance=distance_km))

    return model.reduction_factor * (distance_km * 1000) / model.speed_of_light


def within_bound(
    distance_km: float,
    model: LatencyModel = LatencyModel(),
) -> bool:
    return fronthaul_latency(distance_km, model) <= model.bound
