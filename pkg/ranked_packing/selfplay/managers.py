import logging
from pathlib import (
    Path,
)
from typing import (
    Optional,
    Union,
)

from ranked_packing.config import (
    RunConfig,
)
from ranked_packing.managers import (
    LazySavingRunnerManager,
)
from ranked_packing.nnet.models import (
    enable_deterministic_mode,
)
from ranked_packing.results import (
    BaseRunnableResult,
)
from ranked_packing.selfplay.runners import (
    TrainingRunner,
)


logger = logging.getLogger(__name__)


class TrainingRunnerManager(LazySavingRunnerManager):
    """
    Менеджер запуска обучения. Каталог запуска: config.json, metrics.csv,
    checkpoints/iter_NNNN.bin с JSON-описаниями
    """

    def _prepare_runner_class(self):
        return TrainingRunner

    def _prepare_runner_kwargs(self, *args, config: RunConfig = None, jobs: Optional[int] = None, **kwargs):
        return {
            'config': config,
            'jobs': jobs if jobs is not None else config.train.jobs,
            **kwargs,
        }

    def _before_create_runner(self, *args, config: RunConfig = None, **kwargs):
        if config.deterministic:
            enable_deterministic_mode()

        logger.info(
            'Обучение: K=%d, J=%d, M=%d, N=%d, %dx%d',
            config.train.iterations,
            config.train.episodes_per_iteration,
            config.search.simulations,
            config.train.n_items,
            config.train.width,
            config.train.virtual_height,
        )

    def _prepare_runner(self, *args, **kwargs):
        """
        Эпизоды ставятся в очередь пусковиком на каждой итерации
        """


def run_training(
    config: RunConfig,
    out_dir: Union[str, Path],
    jobs: Optional[int] = None,
) -> BaseRunnableResult:
    """
    Обучение с записью каталога запуска, возвращает результат пусковика
    """
    manager = TrainingRunnerManager()
    manager.run(config=config, out_dir=Path(out_dir), jobs=jobs)

    return manager.result
