from typing import (
    Dict,
    Sequence,
)

import torch

from ranked_packing.nnet.models import (
    PolicyValueModel,
)
from ranked_packing.nnet.training import (
    Sample,
    batch_loss,
)


def check_gradients(
    model: PolicyValueModel,
    samples: Sequence[Sample],
    epsilon: float = 1e-6,
) -> Dict[str, float]:
    """
    Сравнение аналитического градиента потери с центральными конечными
    разностями.

    Возвращает для каждой группы параметров относительную ошибку
    ||g - g_num|| / (||g|| + ||g_num||). Проверка имеет смысл в двойной точности.
    """
    net = model.net
    net.zero_grad()
    batch_loss(model, samples).backward()

    analytic = {
        name: parameter.grad.detach().clone()
        for name, parameter in net.named_parameters()
    }

    errors = {}
    with torch.no_grad():
        for name, parameter in net.named_parameters():
            numeric = torch.zeros_like(parameter)
            flat = parameter.view(-1)

            for index in range(flat.numel()):
                original = float(flat[index])

                flat[index] = original + epsilon
                plus = float(batch_loss(model, samples))
                flat[index] = original - epsilon
                minus = float(batch_loss(model, samples))
                flat[index] = original

                numeric.view(-1)[index] = (plus - minus) / (2 * epsilon)

            difference = float(torch.linalg.norm(analytic[name] - numeric))
            scale = float(torch.linalg.norm(analytic[name]) + torch.linalg.norm(numeric))
            errors[name] = difference / scale if scale > 0 else 0.0

    net.zero_grad()

    return errors
