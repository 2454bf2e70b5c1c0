import logging
from abc import (
    ABCMeta,
    abstractmethod,
)
from dataclasses import (
    dataclass,
    replace,
)
from typing import (
    Callable,
    List,
    Optional,
    Tuple,
)

import numpy as np

from ranked_packing.config import (
    SearchConfig,
)
from ranked_packing.exceptions import (
    ConfigurationError,
    IllegalActionError,
)
from ranked_packing.mcts.nodes import (
    SearchNode,
)
from ranked_packing.nnet.models import (
    PolicyValueModel,
)
from ranked_packing.packing.solutions import (
    PackingSolution,
    SolutionRecorder,
)
from ranked_packing.packing.states import (
    Action,
    PackState,
    index_action,
    step,
)
from ranked_packing.selfplay.ranking import (
    ranked_value,
)
from ranked_packing.strings import (
    SIMULATIONS_ERROR,
    TERMINAL_ROOT_ERROR,
)


logger = logging.getLogger(__name__)


def policy_from_visits(
    visit_counts: np.ndarray,
    indices: np.ndarray,
    action_space: int,
    temperature: float,
) -> np.ndarray:
    """
    pi^(a) пропорционально N(a)^(1 / tau). При tau = 0 вся масса у самого
    посещаемого действия, при равенстве у действия с меньшим индексом
    """
    policy = np.zeros(action_space, dtype=np.float64)
    counts = np.zeros(action_space, dtype=np.float64)
    counts[indices] = visit_counts

    if temperature == 0 or not counts.any():
        policy[int(np.argmax(counts))] = 1.0

        return policy

    visited = counts > 0
    logits = np.log(counts[visited]) / temperature
    weights = np.exp(logits - logits.max())
    policy[visited] = weights / weights.sum()

    return policy


@dataclass
class SearchResult:
    """
    Улучшенная стратегия pi^ по всем N * W' действиям, оценка v^ корня и
    дерево поиска
    """
    policy: np.ndarray
    value: float
    root: SearchNode

    def choose(self, generator: np.random.Generator) -> Action:
        """
        Действие, выбранное по pi^
        """
        index = int(generator.choice(len(self.policy), p=self.policy))

        return index_action(index, self.root.state.width)

    def subtree(self, action: Action) -> Optional[SearchNode]:
        """
        Поддерево выбранного действия для переиспользования на следующем ходе
        """
        edge = self.root.actions.index(action)

        return self.root.children.get(edge)


class LeafEvaluator(metaclass=ABCMeta):
    """
    Оценка листьев дерева поиска
    """

    @abstractmethod
    def evaluate(self, node: SearchNode) -> float:
        """
        Раскрытие нетерминального узла: априорные вероятности и ценность
        """

    @abstractmethod
    def terminal_value(self, state: PackState) -> float:
        """
        Ценность терминального состояния
        """


class NetworkEvaluator(LeafEvaluator):
    """
    Листья оцениваются сетью, терминальные состояния ранжированной наградой
    относительно текущего порога r_alpha
    """

    def __init__(
        self,
        model: PolicyValueModel,
        reward_threshold: float,
        generator: np.random.Generator,
    ):
        self._model = model
        self._reward_threshold = reward_threshold
        self._generator = generator

    def evaluate(self, node: SearchNode) -> float:
        output = self._model.predict(node.state)

        priors = output.policy[node.action_indices]
        total = priors.sum()
        node.expand(priors / total if total > 0 else np.full(len(priors), 1.0 / len(priors)))

        return output.value

    def terminal_value(self, state: PackState) -> float:
        return float(ranked_value(state.reward(), self._reward_threshold, self._generator))


class RolloutEvaluator(LeafEvaluator):
    """
    Равномерные априорные вероятности и награда одного случайного прогона до
    конца эпизода
    """

    def __init__(self, generator: np.random.Generator):
        self._generator = generator

    def evaluate(self, node: SearchNode) -> float:
        node.expand(np.full(len(node.actions), 1.0 / len(node.actions)))

        state = node.state
        while not state.is_terminal:
            actions = state.legal_actions()
            state, _, _ = step(state, actions[int(self._generator.integers(len(actions)))])

        return state.reward()

    def terminal_value(self, state: PackState) -> float:
        return state.reward()


class TreeSearch:
    """
    M симуляций PUCT из корня: выбор ребра, раскрытие нового узла или оценка
    терминального, обратное распространение значения листа вдоль пути без
    смены знака
    """

    def __init__(
        self,
        evaluator: LeafEvaluator,
        config: SearchConfig,
        generator: np.random.Generator,
        noise: bool = False,
    ):
        if config.simulations < 1:
            raise ConfigurationError(SIMULATIONS_ERROR.format(simulations=config.simulations))

        self._evaluator = evaluator
        self._config = config
        self._generator = generator
        self._noise = noise

    def _simulate(self, root: SearchNode):
        node = root
        path: List[Tuple[SearchNode, int]] = []

        while True:
            if node.is_terminal:
                value = self._evaluator.terminal_value(node.state)

                break

            edge = node.select(self._config.c_puct)
            path.append((node, edge))

            child = node.children.get(edge)
            if child is None:
                child_state, _, _ = step(node.state, node.actions[edge])
                child = SearchNode(child_state)
                node.children[edge] = child

                if child.is_terminal:
                    value = self._evaluator.terminal_value(child_state)
                else:
                    value = self._evaluator.evaluate(child)

                break

            node = child

        for parent, edge in path:
            parent.backup(edge, value)

    def run(
        self,
        root_state: Optional[PackState] = None,
        root: Optional[SearchNode] = None,
    ) -> SearchResult:
        root = root if root is not None else SearchNode(root_state)

        if root.is_terminal:
            raise IllegalActionError(TERMINAL_ROOT_ERROR)

        if not root.expanded:
            self._evaluator.evaluate(root)

        if self._noise:
            root.add_noise(
                self._generator,
                self._config.dirichlet_epsilon,
                self._config.dirichlet_alpha,
            )

        for _ in range(self._config.simulations):
            self._simulate(root)

        policy = policy_from_visits(
            root.visit_counts,
            root.action_indices,
            root.state.action_space,
            self._config.temperature,
        )

        return SearchResult(policy=policy, value=root.value, root=root)


@dataclass(frozen=True)
class EpisodeStep:
    """
    Состояние хода и стратегия pi^, полученная поиском из него
    """
    state: PackState
    policy: np.ndarray


def play_episode(
    root_state: PackState,
    searcher: Callable[[PackState, Optional[SearchNode]], SearchResult],
    generator: np.random.Generator,
    reuse_tree: bool = False,
    solver: str = '',
) -> Tuple[PackingSolution, List[EpisodeStep]]:
    """
    Эпизод, в котором каждое действие выбирается по результату поиска.

    При reuse_tree поддерево выбранного действия становится корнем
    следующего поиска.
    """
    recorder = SolutionRecorder(state=root_state, solver=solver)
    steps: List[EpisodeStep] = []
    root: Optional[SearchNode] = None

    while not recorder.state.is_terminal:
        result = searcher(recorder.state, root)
        steps.append(EpisodeStep(state=recorder.state, policy=result.policy))

        action = result.choose(generator)
        root = result.subtree(action) if reuse_tree else None

        recorder.apply(action)

    return recorder.solution(), steps


def search(
    root_state: PackState,
    model: PolicyValueModel,
    config: SearchConfig,
    reward_threshold: float,
    generator: np.random.Generator,
    noise: bool = False,
    root: Optional[SearchNode] = None,
) -> SearchResult:
    """
    Поиск, направляемый сетью
    """
    model.check_state(root_state if root is None else root.state)

    return TreeSearch(
        NetworkEvaluator(model, reward_threshold, generator),
        config,
        generator,
        noise=noise,
    ).run(root_state=root_state, root=root)


def rollout_search(
    root_state: PackState,
    simulations: int,
    generator: np.random.Generator,
    config: Optional[SearchConfig] = None,
    root: Optional[SearchNode] = None,
) -> SearchResult:
    """
    Базовый MCTS с оценкой листьев случайными прогонами
    """
    config = replace(config if config is not None else SearchConfig(), simulations=simulations)

    return TreeSearch(
        RolloutEvaluator(generator),
        config,
        generator,
    ).run(root_state=root_state, root=root)
