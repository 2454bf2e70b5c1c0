from pathlib import (
    Path,
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
)

from ranked_packing.config import (
    RunConfig,
)
from ranked_packing.consts import (
    MODEL_STREAM_KEY,
    RUN_CHECKPOINTS_DIR_NAME,
    RUN_CONFIG_FILE_NAME,
    RUN_METRICS_FILE_NAME,
)
from ranked_packing.helpers import (
    BaseRunnerHelper,
)
from ranked_packing.nnet.models import (
    PolicyValueModel,
)
from ranked_packing.nnet.training import (
    ModelTrainer,
)
from ranked_packing.selfplay.buffers import (
    RewardBuffers,
    SampleBuffer,
)
from ranked_packing.utils import (
    derive_seed,
)


class SelfPlayRunnerHelper(BaseRunnerHelper):
    """
    Глобальный помощник эпизодов одной итерации: неизменяемый снимок модели
    и замороженный порог r_alpha
    """

    def __init__(
        self,
        *args,
        config: Optional[RunConfig] = None,
        model: Optional[PolicyValueModel] = None,
        reward_threshold: float = 0.0,
        iteration: int = 0,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)

        self.config = config if config is not None else RunConfig()
        self.model = model
        self.reward_threshold = reward_threshold
        self.iteration = iteration


class TrainingRunnerHelper(BaseRunnerHelper):
    """
    Состояние цикла обучения: обучаемая копия модели, буферы наград и
    выборки, журнал метрик и пути каталога запуска
    """

    def __init__(
        self,
        *args,
        config: Optional[RunConfig] = None,
        out_dir: Optional[Path] = None,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)

        self.config = config if config is not None else RunConfig()
        self.out_dir = Path(out_dir) if out_dir is not None else Path('.')

        train = self.config.train
        self.model = PolicyValueModel.build(
            n_items=train.n_items,
            height=train.virtual_height,
            width=train.width,
            config=self.config.net,
            seed=derive_seed(self.config.seed, MODEL_STREAM_KEY),
        )
        self.trainer = ModelTrainer(self.model)
        self.reward_buffers = RewardBuffers(capacity=train.buffer_capacity)
        self.sample_buffer = SampleBuffer()
        self.metrics: List[Dict[str, Any]] = []

    @property
    def config_path(self) -> Path:
        return self.out_dir / RUN_CONFIG_FILE_NAME

    @property
    def metrics_path(self) -> Path:
        return self.out_dir / RUN_METRICS_FILE_NAME

    @property
    def checkpoints_dir(self) -> Path:
        return self.out_dir / RUN_CHECKPOINTS_DIR_NAME

    @property
    def reward_threshold(self) -> float:
        return self.reward_buffers.threshold(self.config.train.percentile)
