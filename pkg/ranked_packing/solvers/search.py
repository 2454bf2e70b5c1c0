from abc import (
    ABCMeta,
    abstractmethod,
)
from typing import (
    Callable,
    List,
    Optional,
)

import numpy as np

from ranked_packing.enums import (
    SolverEnum,
)
from ranked_packing.exceptions import (
    ConfigurationError,
)
from ranked_packing.mcts.nodes import (
    SearchNode,
)
from ranked_packing.mcts.search import (
    SearchResult,
    play_episode,
    rollout_search,
    search,
)
from ranked_packing.packing.states import (
    PackState,
)
from ranked_packing.solvers.base import (
    BaseSolver,
)
from ranked_packing.strings import (
    MODEL_REQUIRED_ERROR,
)


Searcher = Callable[[PackState, Optional[SearchNode]], SearchResult]


class BaseSearchSolver(BaseSolver, metaclass=ABCMeta):
    """
    Решатель, выбирающий каждое действие поиском по дереву.

    При температуре 0 действие - самое посещаемое ребро корня. Статистики
    корня первого хода сохраняются в solution.extra['tree'].
    """

    # Глубина сохраняемого дерева первого хода
    tree_depth: int = 2

    @abstractmethod
    def _prepare_searcher(self, generator: np.random.Generator) -> Searcher:
        """
        Функция поиска из состояния с необязательным переиспользуемым корнем
        """

    def solve(self, instance, height=None, generator=None):
        generator = generator if generator is not None else np.random.default_rng(instance.seed)
        searcher = self._prepare_searcher(generator)
        results: List[SearchResult] = []

        def recording_searcher(state, root):
            result = searcher(state, root)
            if not results:
                results.append(result)

            return result

        solution, _ = play_episode(
            PackState.initial(instance, height=height),
            recording_searcher,
            generator,
            reuse_tree=self.search_config.reuse_tree,
            solver=self.name,
        )

        if results:
            solution.extra['tree'] = results[0].root.as_dict(max_depth=self.tree_depth)

        return solution


class RolloutMCTSSolver(BaseSearchSolver):
    """
    MCTS с оценкой листьев случайными прогонами, без сети и ранжирования
    """
    name = SolverEnum.MCTS

    def _prepare_searcher(self, generator):
        def searcher(state, root):
            return rollout_search(
                state,
                self.search_config.simulations,
                generator,
                config=self.search_config,
                root=root,
            )

        return searcher


class SelfPlaySolver(BaseSearchSolver):
    """
    MCTS, направляемый обученной сетью. Терминальные листья оцениваются
    относительно порога r_alpha из буфера наград контрольной точки
    """
    name = SolverEnum.SELFPLAY
    requires_model = True

    def _prepare_searcher(self, generator):
        if self.model is None:
            raise ConfigurationError(MODEL_REQUIRED_ERROR.format(solver=self.name))

        def searcher(state, root):
            return search(
                state,
                self.model,
                self.search_config,
                self.reward_threshold,
                generator,
                root=root,
            )

        return searcher
