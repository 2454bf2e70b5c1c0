import math
from typing import (
    Sequence,
)

import numpy as np

from ranked_packing.consts import (
    MAX_REWARD,
)
from ranked_packing.exceptions import (
    ConfigurationError,
)
from ranked_packing.strings import (
    PERCENTILE_ERROR,
)


def percentile_threshold(
    rewards: Sequence[float],
    alpha: float,
) -> float:
    """
    Порог r_alpha: alpha-й перцентиль по ближайшему рангу, элемент с индексом
    ceil(alpha / 100 * n) - 1 отсортированного по возрастанию буфера.
    Для пустого буфера порог 0
    """
    if not 0 < alpha < 100:
        raise ConfigurationError(PERCENTILE_ERROR.format(alpha=alpha))

    if not rewards:
        return 0.0

    ordered = sorted(rewards)
    index = max(0, math.ceil(alpha / 100 * len(ordered)) - 1)

    return float(ordered[index])


def ranked_value(
    reward: float,
    threshold: float,
    generator: np.random.Generator,
) -> int:
    """
    Ранжированная награда относительно порога: +1 выше порога или при
    максимальной награде, -1 ниже порога, честная монета при равенстве
    """
    if reward >= MAX_REWARD or reward > threshold:
        return 1

    if reward < threshold:
        return -1

    return 1 if generator.random() < 0.5 else -1


def ranked_reward(
    reward: float,
    buffer: Sequence[float],
    alpha: float,
    generator: np.random.Generator,
) -> int:
    return ranked_value(reward, percentile_threshold(buffer, alpha), generator)
