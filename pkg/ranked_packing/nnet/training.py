import logging
import math
from typing import (
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np
import torch

from ranked_packing.exceptions import (
    NonFiniteLossError,
)
from ranked_packing.nnet.losses import (
    parameter_norm,
    policy_value_loss,
)
from ranked_packing.nnet.models import (
    PolicyValueModel,
)
from ranked_packing.strings import (
    EMPTY_MINIBATCH_ERROR,
    NON_FINITE_LOSS_ERROR,
)


logger = logging.getLogger(__name__)


class Sample(NamedTuple):
    """
    Обучающий пример (s_t, pi^, z)
    """
    state: np.ndarray
    mask: np.ndarray
    policy: np.ndarray
    value: float


def collate(
    samples: Sequence[Sample],
    dtype: torch.dtype,
) -> Tuple[torch.Tensor, torch.Tensor, torch.Tensor, torch.Tensor]:
    if not samples:
        raise ValueError(EMPTY_MINIBATCH_ERROR)

    return (
        torch.as_tensor(np.stack([sample.state for sample in samples]), dtype=dtype),
        torch.as_tensor(np.stack([sample.mask for sample in samples]), dtype=torch.bool),
        torch.as_tensor(np.stack([sample.policy for sample in samples]), dtype=dtype),
        torch.as_tensor([sample.value for sample in samples], dtype=dtype),
    )


def batch_loss(
    model: PolicyValueModel,
    samples: Sequence[Sample],
) -> torch.Tensor:
    states, masks, target_policy, target_value = collate(samples, model.dtype)
    policy, value = model.net(states, masks)

    total = policy_value_loss(policy, value, target_policy, target_value)
    if model.config.weight_decay:
        total = total + model.config.weight_decay * parameter_norm(model.net.parameters())

    return total


def make_optimizer(model: PolicyValueModel) -> torch.optim.Optimizer:
    return torch.optim.SGD(
        model.net.parameters(),
        lr=model.config.learning_rate,
        momentum=model.config.momentum,
    )


def train_step(
    model: PolicyValueModel,
    optimizer: torch.optim.Optimizer,
    samples: Sequence[Sample],
    iteration: int = 0,
) -> float:
    """
    Один шаг градиентного спуска по средней потере мини-пакета.

    Возвращает потерю до обновления. При неконечной потере или градиенте
    параметры не изменяются.
    """
    model.net.train()
    optimizer.zero_grad()

    total = batch_loss(model, samples)
    total.backward()

    gradients_finite = all(
        bool(torch.isfinite(parameter.grad).all())
        for parameter in model.net.parameters()
        if parameter.grad is not None
    )
    value = float(total.detach())

    if not math.isfinite(value) or not gradients_finite:
        optimizer.zero_grad()
        model.net.eval()

        raise NonFiniteLossError(NON_FINITE_LOSS_ERROR.format(iteration=iteration))

    optimizer.step()
    model.net.eval()

    return value


class ModelTrainer:
    """
    Обучение собственной копии модели на выборке D: tau шагов по
    мини-пакетам, выбранным равномерно с возвращением
    """

    def __init__(
        self,
        model: PolicyValueModel,
        optimizer: Optional[torch.optim.Optimizer] = None,
    ):
        self.model = model
        self.optimizer = optimizer if optimizer is not None else make_optimizer(model)

    def fit(
        self,
        samples: List[Sample],
        steps: int,
        batch_size: int,
        generator: np.random.Generator,
        iteration: int = 0,
    ) -> float:
        """
        Средняя по шагам потеря. Версия модели увеличивается, если был сделан
        хотя бы один шаг
        """
        if not samples or steps < 1:
            return 0.0

        losses = []
        for _ in range(steps):
            indices = generator.integers(len(samples), size=batch_size)
            losses.append(
                train_step(
                    self.model,
                    self.optimizer,
                    [samples[int(index)] for index in indices],
                    iteration=iteration,
                )
            )

        self.model.version += 1

        return float(np.mean(losses))
