import math
from typing import (
    Tuple,
)

import torch
from torch import (
    nn,
)

from ranked_packing.config import (
    NetConfig,
)
from ranked_packing.enums import (
    ArchitectureEnum,
)
from ranked_packing.exceptions import (
    IllegalActionError,
)
from ranked_packing.strings import (
    EMPTY_LEGAL_MASK_ERROR,
)


# Количество сверток в секции IMPALA: свертка секции и два остаточных блока
IMPALA_SECTION_CONVOLUTIONS = 5


class PlainTrunk(nn.Sequential):
    """
    Последовательность сверток с ReLU и нулевым дополнением, сохраняющим
    размер плоскости
    """

    def __init__(
        self,
        in_channels: int,
        config: NetConfig,
    ):
        layers = []
        channels = in_channels
        for _ in range(config.conv_layers):
            layers.append(
                nn.Conv2d(
                    channels,
                    config.channels,
                    kernel_size=config.kernel_size,
                    padding=config.kernel_size // 2,
                )
            )
            layers.append(nn.ReLU())
            channels = config.channels

        super().__init__(*layers)

    @staticmethod
    def output_grid(grid: Tuple[int, int], config: NetConfig) -> Tuple[int, int]:
        return grid


class ResidualBlock(nn.Module):

    def __init__(self, channels: int, kernel_size: int):
        super().__init__()

        self.conv0 = nn.Conv2d(channels, channels, kernel_size, padding=kernel_size // 2)
        self.conv1 = nn.Conv2d(channels, channels, kernel_size, padding=kernel_size // 2)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        out = self.conv0(torch.relu(x))
        out = self.conv1(torch.relu(out))

        return x + out


class ImpalaSection(nn.Sequential):
    """
    Свертка, подвыборка максимумом с шагом 2 и два остаточных блока
    """

    def __init__(self, in_channels: int, channels: int, kernel_size: int):
        super().__init__(
            nn.Conv2d(in_channels, channels, kernel_size, padding=kernel_size // 2),
            nn.MaxPool2d(kernel_size=3, stride=2, padding=1),
            ResidualBlock(channels, kernel_size),
            ResidualBlock(channels, kernel_size),
        )


class ImpalaTrunk(nn.Sequential):
    """
    Остаточная сверточная сеть из секций по пять сверток. Количество секций
    определяется conv_layers, 15 сверток дают три секции
    """

    def __init__(
        self,
        in_channels: int,
        config: NetConfig,
    ):
        sections = []
        channels = in_channels
        for _ in range(self.sections_count(config)):
            sections.append(ImpalaSection(channels, config.channels, config.kernel_size))
            channels = config.channels

        super().__init__(*sections, nn.ReLU())

    @staticmethod
    def sections_count(config: NetConfig) -> int:
        return max(1, config.conv_layers // IMPALA_SECTION_CONVOLUTIONS)

    @classmethod
    def output_grid(cls, grid: Tuple[int, int], config: NetConfig) -> Tuple[int, int]:
        height, width = grid
        for _ in range(cls.sections_count(config)):
            height, width = math.ceil(height / 2), math.ceil(width / 2)

        return height, width


TRUNKS = {
    ArchitectureEnum.PLAIN: PlainTrunk,
    ArchitectureEnum.IMPALA: ImpalaTrunk,
}


def masked_softmax(
    logits: torch.Tensor,
    legal_mask: torch.Tensor,
) -> torch.Tensor:
    """
    Softmax по допустимым действиям, недопустимые получают ровно 0
    """
    if not bool(legal_mask.any(dim=-1).all()):
        raise IllegalActionError(EMPTY_LEGAL_MASK_ERROR)

    return torch.softmax(logits.masked_fill(~legal_mask, float('-inf')), dim=-1)


class PolicyValueNet(nn.Module):
    """
    Двухголовая сеть f(s) = (pi, v).

    Вход - тензор (B, N + 1, H', W'), маска допустимых действий (B, N * W').
    Голова стратегии - линейный слой и softmax по маске, голова ценности -
    линейный слой и tanh.
    """

    def __init__(
        self,
        n_items: int,
        height: int,
        width: int,
        config: NetConfig,
    ):
        super().__init__()

        self.n_items = n_items
        self.height = height
        self.width = width

        trunk_class = TRUNKS[config.architecture]
        self.trunk = trunk_class(n_items + 1, config)

        out_height, out_width = trunk_class.output_grid((height, width), config)
        features = config.channels * out_height * out_width

        self.policy_head = nn.Linear(features, self.action_space)
        self.value_head = nn.Linear(features, 1)

    @property
    def action_space(self) -> int:
        return self.n_items * self.width

    def forward(
        self,
        x: torch.Tensor,
        legal_mask: torch.Tensor,
    ) -> Tuple[torch.Tensor, torch.Tensor]:
        features = torch.flatten(self.trunk(x), start_dim=1)

        policy = masked_softmax(self.policy_head(features), legal_mask)
        value = torch.tanh(self.value_head(features)).squeeze(-1)

        return policy, value
