import logging
from dataclasses import (
    dataclass,
    field,
)
from typing import (
    List,
)

import numpy as np

from ranked_packing.decorators import (
    collect_errors,
)
from ranked_packing.enums import (
    SolverEnum,
)
from ranked_packing.functions import (
    GlobalHelperFunction,
)
from ranked_packing.mcts.search import (
    play_episode,
    search,
)
from ranked_packing.nnet.training import (
    Sample,
)
from ranked_packing.packing.instances import (
    Instance,
    generate_sliced_instance,
)
from ranked_packing.packing.states import (
    PackState,
    encode_state,
    legal_mask,
)
from ranked_packing.selfplay.ranking import (
    ranked_value,
)


logger = logging.getLogger(__name__)


@dataclass
class EpisodeRecord:
    """
    Итог эпизода самоигры
    """
    instance: Instance
    reward: float
    h_tilde: int
    ranked: int
    perfect: bool
    dead: bool
    samples: List[Sample] = field(default_factory=list)


class SelfPlayEpisodeFunction(GlobalHelperFunction):
    """
    Эпизод самоигры: новый нарезанный экземпляр, ходы по pi^ из поиска с
    шумом Дирихле в корне, ранжирование итоговой награды по замороженному
    порогу и обучающие примеры по всем шагам эпизода
    """

    def _generate_instance(self, generator: np.random.Generator) -> Instance:
        train = self.global_helper.config.train
        h_star = int(generator.integers(train.h_star_min, train.h_star_max + 1))

        return generate_sliced_instance(
            w_star=train.width,
            h_star=h_star,
            n_items=train.n_items,
            seed=int(generator.integers(2 ** 63 - 1)),
            height=train.height,
        )

    @collect_errors
    def _prepare(self):
        global_helper = self.global_helper
        config = global_helper.config
        generator = self.helper.generator

        instance = self._generate_instance(generator)

        def searcher(state, root):
            return search(
                state,
                global_helper.model,
                config.search,
                global_helper.reward_threshold,
                generator,
                noise=True,
                root=root,
            )

        solution, steps = play_episode(
            PackState.initial(instance, height=config.train.virtual_height),
            searcher,
            generator,
            reuse_tree=config.search.reuse_tree,
            solver=SolverEnum.SELFPLAY,
        )

        reward = solution.reward
        z = ranked_value(reward, global_helper.reward_threshold, generator)
        dead = not solution.state.all_packed

        if dead:
            logger.warning(
                'Итерация %d, эпизод %s: тупиковое состояние, упаковано %d из %d',
                global_helper.iteration,
                self.helper.keys,
                solution.state.step,
                instance.n_items,
            )

        logger.debug(
            'Итерация %d, эпизод %s: r=%.4f, z=%+d',
            global_helper.iteration,
            self.helper.keys,
            reward,
            z,
        )

        self.result.payload = EpisodeRecord(
            instance=instance,
            reward=reward,
            h_tilde=solution.h_tilde,
            ranked=z,
            perfect=solution.state.all_packed and solution.h_tilde == solution.state.h_star,
            dead=dead,
            samples=[
                Sample(
                    state=encode_state(episode_step.state, dtype=np.float32),
                    mask=legal_mask(episode_step.state),
                    policy=episode_step.policy.astype(np.float32),
                    value=float(z),
                )
                for episode_step in steps
            ],
        )
