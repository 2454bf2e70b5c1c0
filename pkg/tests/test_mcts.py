import numpy as np
import pytest

from ranked_packing.config import (
    NetConfig,
    SearchConfig,
)
from ranked_packing.exceptions import (
    ConfigurationError,
    IllegalActionError,
    IncompatibleCheckpointError,
)
from ranked_packing.mcts.nodes import (
    SearchNode,
)
from ranked_packing.mcts.search import (
    RolloutEvaluator,
    TreeSearch,
    play_episode,
    policy_from_visits,
    rollout_search,
    search,
)
from ranked_packing.nnet.models import (
    PolicyValueModel,
)
from ranked_packing.packing.instances import (
    make_instance,
)
from ranked_packing.packing.states import (
    PackState,
    replay,
)
from ranked_packing.solvers import (
    get_solver,
)


@pytest.fixture
def tiny_model():
    return PolicyValueModel.build(
        n_items=2,
        height=2,
        width=2,
        config=NetConfig(conv_layers=1, channels=4),
        seed=0,
    )


def test_policy_from_visits_greedy():
    policy = policy_from_visits(np.array([1, 3]), np.array([0, 2]), 4, temperature=0.0)

    assert policy.tolist() == [0.0, 0.0, 1.0, 0.0]


def test_policy_from_visits_greedy_tie_takes_lower_index():
    policy = policy_from_visits(np.array([2, 2]), np.array([1, 3]), 4, temperature=0.0)

    assert policy.tolist() == [0.0, 1.0, 0.0, 0.0]


def test_policy_from_visits_unit_temperature_is_proportional():
    policy = policy_from_visits(np.array([1, 3]), np.array([0, 2]), 4, temperature=1.0)

    assert policy == pytest.approx([0.25, 0.0, 0.75, 0.0])


def test_rollout_search_prefers_perfect_action(two_unit_items, generator):
    state = replay(two_unit_items, [(0, 0)])

    result = rollout_search(state, 20, generator, config=SearchConfig(temperature=0.0))

    # Ребра корня: (1, 0) с наградой 0.5 и (1, 1) с наградой 1.0
    assert result.root.visit_counts.sum() == 20
    assert result.root.visit_counts[1] > result.root.visit_counts[0]
    assert result.policy[3] == 1.0
    assert 0.5 < result.value < 1.0


def test_search_rejects_terminal_root(two_unit_items, generator):
    state = replay(two_unit_items, [(0, 0), (1, 1)])

    with pytest.raises(IllegalActionError):
        rollout_search(state, 4, generator)


def test_search_rejects_zero_simulations(two_unit_items, generator):
    with pytest.raises(ConfigurationError):
        rollout_search(PackState.initial(two_unit_items), 0, generator)


def test_network_search_policy_covers_only_legal_actions(two_unit_items, tiny_model, generator):
    state = replay(two_unit_items, [(0, 0)])

    result = search(
        state,
        tiny_model,
        SearchConfig(simulations=8, temperature=1.0),
        reward_threshold=0.0,
        generator=generator,
        noise=True,
    )

    assert result.policy.sum() == pytest.approx(1.0)
    assert result.policy[0] == 0.0
    assert result.policy[1] == 0.0
    assert -1.0 <= result.value <= 1.0


class _RecordingEvaluator(RolloutEvaluator):
    """
    Случайные прогоны с запоминанием значения, полученного узлом при раскрытии
    """

    def __init__(self, generator):
        super().__init__(generator)
        self.expansion_values = {}

    def evaluate(self, node):
        value = super().evaluate(node)
        self.expansion_values[id(node)] = value

        return value


def _assert_edge_statistics(node, evaluator):
    for edge in range(len(node.actions)):
        child = node.children.get(edge)
        if child is None:
            assert node.visit_counts[edge] == 0
            assert node.total_values[edge] == 0.0

            continue

        if child.is_terminal:
            assert node.total_values[edge] == pytest.approx(node.visit_counts[edge] * child.state.reward())

            continue

        assert node.visit_counts[edge] == child.visits
        assert node.total_values[edge] == pytest.approx(
            evaluator.expansion_values[id(child)] + child.total_values.sum()
        )

        _assert_edge_statistics(child, evaluator)


def test_search_statistics_match_backed_up_leaf_values(generator):
    instance = make_instance([(2, 2), (2, 1), (1, 1), (1, 3), (3, 1)], w_star=4)
    evaluator = _RecordingEvaluator(generator)

    result = TreeSearch(evaluator, SearchConfig(simulations=200), generator).run(
        root_state=PackState.initial(instance),
    )

    assert result.root.visit_counts.sum() == 200
    assert result.root.visits == 201
    _assert_edge_statistics(result.root, evaluator)


def test_network_search_concentrates_on_winning_action(two_unit_items, tiny_model, generator):
    state = replay(two_unit_items, [(0, 0)])
    assert state.legal_actions() == [(1, 0), (1, 1)]

    root = SearchNode(state)
    root.expand(np.full(2, 0.5))

    # (1, 0) дает награду 0.5 и z = -1, (1, 1) дает награду 1.0 и z = +1
    result = search(
        state,
        tiny_model,
        SearchConfig(simulations=1000, temperature=1.0),
        reward_threshold=0.75,
        generator=generator,
        root=root,
    )

    assert result.root.visit_counts.sum() == 1000
    assert result.policy[3] >= 0.9
    assert result.policy[2] + result.policy[3] == pytest.approx(1.0)


def test_network_search_checks_model_shape(three_items, tiny_model, generator):
    with pytest.raises(IncompatibleCheckpointError):
        search(PackState.initial(three_items), tiny_model, SearchConfig(), 0.0, generator)


def test_dirichlet_noise_keeps_distribution(three_items, generator):
    node = SearchNode(PackState.initial(three_items))

    node.add_noise(generator, epsilon=0.25, alpha=1.0)

    assert node.priors.sum() == pytest.approx(1.0)
    assert node.base_priors == pytest.approx(np.full(len(node.actions), 1.0 / len(node.actions)))


def test_play_episode_with_tree_reuse_packs_instance(generator):
    instance = make_instance([(1, 1), (1, 1), (1, 1)], w_star=3)
    config = SearchConfig(simulations=16, temperature=0.0, reuse_tree=True)

    def searcher(state, root):
        return rollout_search(state, config.simulations, generator, config=config, root=root)

    solution, steps = play_episode(PackState.initial(instance), searcher, generator, reuse_tree=True)

    assert solution.state.all_packed
    assert len(steps) == 3
    assert all(episode_step.policy.sum() == pytest.approx(1.0) for episode_step in steps)


def test_rollout_solver_keeps_first_move_tree(two_unit_items, generator):
    solver = get_solver('mcts', search_config=SearchConfig(simulations=16, temperature=0.0))

    solution = solver.solve(two_unit_items, generator=generator)

    assert solution.state.all_packed
    assert solution.h_tilde == 1
    assert solution.extra['tree']['visits'] == 17
    assert len(solution.extra['tree']['edges']) == 4
