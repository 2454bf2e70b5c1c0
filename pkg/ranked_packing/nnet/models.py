import copy
import logging
from dataclasses import (
    dataclass,
)
from typing import (
    Tuple,
)

import numpy as np
import torch

from ranked_packing.config import (
    NetConfig,
)
from ranked_packing.enums import (
    DTypeEnum,
)
from ranked_packing.exceptions import (
    IncompatibleCheckpointError,
)
from ranked_packing.nnet.networks import (
    PolicyValueNet,
)
from ranked_packing.packing.states import (
    PackState,
    encode_state,
    legal_mask,
)
from ranked_packing.strings import (
    CHECKPOINT_SHAPE_ERROR,
)


logger = logging.getLogger(__name__)

TORCH_DTYPES = {
    DTypeEnum.FLOAT32: torch.float32,
    DTypeEnum.FLOAT64: torch.float64,
}


def enable_deterministic_mode():
    """
    Детерминированные алгоритмы torch и один поток вычислений
    """
    torch.use_deterministic_algorithms(True)
    torch.set_num_threads(1)


@dataclass(frozen=True)
class NetOutput:
    """
    Распределение по N * W' действиям и оценка ценности из [-1, 1]
    """
    policy: np.ndarray
    value: float


class PolicyValueModel:
    """
    Модель стратегии и ценности: сеть, ее конфигурация и номер версии
    параметров.

    Поиск работает со снимками модели, обучение изменяет собственную копию и
    публикует новый снимок после итерации.
    """

    def __init__(
        self,
        net: PolicyValueNet,
        config: NetConfig,
        version: int = 0,
    ):
        self.net = net
        self.config = config
        self.version = version

    def __repr__(self):
        return (
            f'<{self.__class__.__name__} @architecture="{self.config.architecture}" '
            f'@shape="{self.shape}" @version="{self.version}">'
        )

    @classmethod
    def build(
        cls,
        n_items: int,
        height: int,
        width: int,
        config: NetConfig,
        seed: int = 0,
    ) -> 'PolicyValueModel':
        """
        Сеть с инициализацией весов, зависящей только от seed
        """
        with torch.random.fork_rng(devices=[]):
            torch.manual_seed(seed)
            net = PolicyValueNet(n_items, height, width, config)

        net.to(dtype=TORCH_DTYPES[config.dtype])
        net.eval()

        return cls(net=net, config=config)

    @property
    def dtype(self) -> torch.dtype:
        return TORCH_DTYPES[self.config.dtype]

    @property
    def shape(self) -> Tuple[int, int, int]:
        return self.net.n_items, self.net.height, self.net.width

    @property
    def action_space(self) -> int:
        return self.net.action_space

    def check_state(self, state: PackState):
        """
        Экземпляр должен совпадать с сетью по N, H' и W'
        """
        expected = (state.instance.n_items, state.height, state.width)
        if expected != self.shape:
            raise IncompatibleCheckpointError(
                CHECKPOINT_SHAPE_ERROR.format(found=self.shape, expected=expected)
            )

    def forward(
        self,
        state_tensor: np.ndarray,
        mask: np.ndarray,
    ) -> NetOutput:
        with torch.no_grad():
            policy, value = self.net(
                torch.as_tensor(state_tensor, dtype=self.dtype).unsqueeze(0),
                torch.as_tensor(mask, dtype=torch.bool).unsqueeze(0),
            )

        return NetOutput(
            policy=policy[0].numpy().astype(np.float64),
            value=float(value[0]),
        )

    def predict(self, state: PackState) -> NetOutput:
        return self.forward(encode_state(state), legal_mask(state))

    def snapshot(self) -> 'PolicyValueModel':
        """
        Независимая копия для поиска
        """
        net = copy.deepcopy(self.net)
        net.eval()

        return PolicyValueModel(net=net, config=self.config, version=self.version)


def forward(
    model: PolicyValueModel,
    state_tensor: np.ndarray,
    mask: np.ndarray,
) -> NetOutput:
    return model.forward(state_tensor, mask)
