import logging
import time
from functools import (
    partial,
)
from typing import (
    List,
    Optional,
)

import numpy as np
import pandas as pd
import torch

from ranked_packing.consts import (
    CHECKPOINT_FILE_NAME_TEMPLATE,
    EPISODE_STREAM_KEY,
    METRICS_COLUMNS,
    TRAINING_STREAM_KEY,
)
from ranked_packing.errors import (
    NonFiniteLossRunError,
)
from ranked_packing.exceptions import (
    NonFiniteLossError,
)
from ranked_packing.general import (
    Artifact,
)
from ranked_packing.nnet.checkpoints import (
    checkpoint_artifacts,
)
from ranked_packing.nnet.models import (
    enable_deterministic_mode,
)
from ranked_packing.runners import (
    GlobalHelperRunner,
    LazySavingRunner,
)
from ranked_packing.selfplay.functions import (
    EpisodeRecord,
    SelfPlayEpisodeFunction,
)
from ranked_packing.selfplay.helpers import (
    SelfPlayRunnerHelper,
    TrainingRunnerHelper,
)
from ranked_packing.utils import (
    spawn_generator,
)


logger = logging.getLogger(__name__)


def initialize_torch_worker(deterministic: bool = False):
    """
    Инициализация процесса пула: один поток torch на процесс
    """
    torch.set_num_threads(1)

    if deterministic:
        enable_deterministic_mode()


class SelfPlayRunner(GlobalHelperRunner):
    """
    Пусковик эпизодов одной итерации. Все эпизоды разделяют снимок модели и
    порог r_alpha глобального помощника
    """

    def _prepare_global_helper_class(self):
        return SelfPlayRunnerHelper

    def _prepare_worker_initializer(self):
        return partial(initialize_torch_worker, self._global_helper.config.deterministic)

    @property
    def records(self) -> List[EpisodeRecord]:
        return [
            runnable.result.payload
            for runnable in self.completed
            if runnable.result.has_not_errors
        ]


class TrainingRunner(LazySavingRunner):
    """
    Цикл обучения самоигрой с ранжированной наградой.

    На каждой итерации J эпизодов играются против снимка модели, награды
    попадают в B', примеры в D, затем делается tau шагов обучения, D
    очищается и B заменяется на B'. Артефакты итерации (метрики, контрольная
    точка) записываются в конце итерации.
    """

    def _prepare_helper_class(self):
        return TrainingRunnerHelper

    def _queue_checkpoint(self, iteration: int):
        helper = self.helper
        path = helper.checkpoints_dir / CHECKPOINT_FILE_NAME_TEMPLATE.format(iteration=iteration)

        self.do_on_save(
            checkpoint_artifacts(
                path,
                helper.model,
                iteration=iteration,
                extra={
                    'percentile': helper.config.train.percentile,
                    'reward_buffer': helper.reward_buffers.as_dict(),
                    'reward_threshold': helper.reward_threshold,
                    'rng_state': spawn_generator(
                        helper.config.seed,
                        TRAINING_STREAM_KEY,
                        iteration,
                    ).bit_generator.state,
                },
            )
        )

    def _queue_metrics(self):
        frame = pd.DataFrame(self.helper.metrics, columns=list(METRICS_COLUMNS))

        self.do_on_save(
            Artifact.from_text(self.helper.metrics_path, frame.to_csv(index=False))
        )

    def _play_episodes(self, iteration: int) -> Optional[List[EpisodeRecord]]:
        helper = self.helper
        config = helper.config

        episode_runner = SelfPlayRunner(
            jobs=self._jobs,
            config=config,
            model=helper.model.snapshot(),
            reward_threshold=helper.reward_threshold,
            iteration=iteration,
        )
        for episode in range(config.train.episodes_per_iteration):
            episode_runner.enqueue(
                SelfPlayEpisodeFunction(
                    seed=config.seed,
                    keys=(EPISODE_STREAM_KEY, iteration, episode),
                )
            )

        episode_runner.run()

        if episode_runner.result.has_errors:
            self.result.append_entity(episode_runner.result)

            return None

        return episode_runner.records

    def _run_iteration(self, iteration: int) -> bool:
        helper = self.helper
        config = helper.config
        started = time.perf_counter()

        records = self._play_episodes(iteration)
        if records is None:
            return False

        for record in records:
            helper.reward_buffers.stage(record.reward)
            helper.sample_buffer.extend(record.samples)

        try:
            loss = helper.trainer.fit(
                helper.sample_buffer.samples,
                steps=config.train.train_steps,
                batch_size=config.train.batch_size,
                generator=spawn_generator(config.seed, TRAINING_STREAM_KEY, iteration),
                iteration=iteration,
            )
        except NonFiniteLossError as exception:
            logger.error('Итерация %d: %s', iteration, exception)

            self.result.append_entity(NonFiniteLossRunError(str(exception)))
            self._queue_checkpoint(iteration)

            return False

        helper.sample_buffer.clear()
        helper.reward_buffers.commit()

        rewards = np.array([record.reward for record in records], dtype=np.float64)
        row = {
            'iteration': iteration,
            'mean_reward': float(rewards.mean()),
            'reward_std': float(rewards.std()),
            'optimality_ratio': float(np.mean([record.perfect for record in records])),
            'loss': loss,
            'wall_seconds': 0.0 if config.deterministic else round(time.perf_counter() - started, 3),
        }
        helper.metrics.append(row)

        logger.info(
            'Итерация %d: r=%.4f (std %.4f), доля H~=H* %.2f, потеря %.4f, r_alpha=%.4f',
            iteration,
            row['mean_reward'],
            row['reward_std'],
            row['optimality_ratio'],
            loss,
            helper.reward_threshold,
        )

        self._queue_metrics()
        if iteration % config.train.checkpoint_every == 0 or iteration == config.train.iterations:
            self._queue_checkpoint(iteration)

        return True

    def run(self, *args, **kwargs):
        self.before_validate()
        self.validate()
        self.after_validate()

        if self.result.has_errors:
            return

        helper = self.helper
        self.do_on_save(Artifact.from_text(helper.config_path, helper.config.dumps()))
        self._queue_metrics()
        self._queue_checkpoint(0)
        self.do_save()

        for iteration in range(1, helper.config.train.iterations + 1):
            completed = self._run_iteration(iteration)

            # Артефакты итерации пишутся и при прерывании на неконечной потере
            self.do_save()

            if not completed:
                break
