from typing import (
    Iterable,
)

import numpy as np
import torch

from ranked_packing.consts import (
    LOG_PROBABILITY_FLOOR,
)
from ranked_packing.nnet.models import (
    NetOutput,
)


def policy_value_loss(
    policy: torch.Tensor,
    value: torch.Tensor,
    target_policy: torch.Tensor,
    target_value: torch.Tensor,
) -> torch.Tensor:
    """
    Средняя по пакету потеря (v - z)^2 - sum(pi^ * log pi)
    """
    value_loss = (value - target_value) ** 2
    policy_loss = -(
        target_policy * torch.log(torch.clamp(policy, min=LOG_PROBABILITY_FLOOR))
    ).sum(dim=-1)

    return (value_loss + policy_loss).mean()


def parameter_norm(parameters: Iterable[torch.Tensor]) -> torch.Tensor:
    """
    Сумма квадратов параметров для слагаемого регуляризации
    """
    return sum((parameter ** 2).sum() for parameter in parameters)


def loss(
    output: NetOutput,
    target_policy: np.ndarray,
    target_value: float,
) -> float:
    """
    Потеря для одного выхода сети
    """
    floored = np.maximum(output.policy, LOG_PROBABILITY_FLOOR)

    return float(
        (output.value - target_value) ** 2 -
        np.sum(np.asarray(target_policy, dtype=np.float64) * np.log(floored))
    )
