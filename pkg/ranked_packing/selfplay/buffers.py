from collections import (
    deque,
)
from typing import (
    Deque,
    Dict,
    List,
    Tuple,
)

from ranked_packing.nnet.training import (
    Sample,
)
from ranked_packing.selfplay.ranking import (
    percentile_threshold,
)


class RewardBuffers:
    """
    Буферы итоговых наград эпизодов.

    B' накапливает награды всех эпизодов с ограничением capacity (FIFO),
    B - снимок B' на конец предыдущей итерации. Порог r_alpha считается
    только по B и не меняется в течение итерации.
    """

    def __init__(self, capacity: int = 100):
        self.capacity = capacity
        self._staging: Deque[float] = deque(maxlen=capacity)
        self._committed: Tuple[float, ...] = ()

    def __repr__(self):
        return (
            f'<{self.__class__.__name__} @capacity="{self.capacity}" '
            f'@committed="{len(self._committed)}" @staging="{len(self._staging)}">'
        )

    @property
    def committed(self) -> Tuple[float, ...]:
        return self._committed

    @property
    def staging(self) -> Tuple[float, ...]:
        return tuple(self._staging)

    def stage(self, reward: float):
        self._staging.append(float(reward))

    def commit(self):
        """
        B = B'
        """
        self._committed = tuple(self._staging)

    def threshold(self, alpha: float) -> float:
        return percentile_threshold(self._committed, alpha)

    def as_dict(self) -> Dict[str, List[float]]:
        return {
            'committed': list(self._committed),
            'staging': list(self._staging),
        }

    @classmethod
    def from_dict(
        cls,
        data: Dict[str, List[float]],
        capacity: int,
    ) -> 'RewardBuffers':
        buffers = cls(capacity=capacity)
        for reward in data.get('staging', ()):
            buffers.stage(reward)

        buffers._committed = tuple(float(reward) for reward in data.get('committed', ()))[-capacity:]

        return buffers


class SampleBuffer:
    """
    Выборка D текущей итерации. Очищается после обучения
    """

    def __init__(self):
        self._samples: List[Sample] = []

    def __len__(self):
        return len(self._samples)

    @property
    def samples(self) -> List[Sample]:
        return self._samples

    def extend(self, samples: List[Sample]):
        self._samples.extend(samples)

    def clear(self):
        self._samples = []
