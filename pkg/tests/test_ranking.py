import numpy as np
import pytest

from ranked_packing.exceptions import (
    ConfigurationError,
)
from ranked_packing.selfplay.buffers import (
    RewardBuffers,
    SampleBuffer,
)
from ranked_packing.selfplay.ranking import (
    percentile_threshold,
    ranked_reward,
    ranked_value,
)


BUFFER = [0.5, 0.6, 0.7, 0.8]


def test_threshold_is_nearest_rank_percentile():
    assert percentile_threshold(BUFFER, 75) == 0.7
    assert percentile_threshold(list(reversed(BUFFER)), 75) == 0.7
    assert percentile_threshold(BUFFER, 1) == 0.5
    assert percentile_threshold(BUFFER, 99) == 0.8


def test_empty_buffer_threshold_is_zero():
    assert percentile_threshold([], 75) == 0.0


@pytest.mark.parametrize('alpha', [0, 100, -5, 150])
def test_percentile_outside_open_interval_is_rejected(alpha):
    with pytest.raises(ConfigurationError):
        percentile_threshold(BUFFER, alpha)


@pytest.mark.parametrize('reward, expected', [(0.8, 1), (0.5, -1), (1.0, 1)])
def test_ranked_reward_against_buffer(reward, expected, generator):
    assert ranked_reward(reward, BUFFER, 75, generator) == expected


def test_perfect_reward_wins_even_at_perfect_threshold(generator):
    assert ranked_value(1.0, 1.0, generator) == 1


def test_tie_with_threshold_is_a_fair_coin(generator):
    draws = np.array([ranked_reward(0.7, BUFFER, 75, generator) for _ in range(10_000)])

    assert set(draws.tolist()) == {-1, 1}
    assert abs((draws == 1).mean() - 0.5) <= 0.05


def test_win_probability_is_monotone_in_reward(generator):
    rewards = sorted(np.linspace(0.0, 1.0, 21).tolist() + [0.7])
    frequencies = []
    for reward in rewards:
        draws = [ranked_value(reward, 0.7, generator) for _ in range(2_000)]
        frequencies.append(draws.count(1) / len(draws))

    assert all(low <= high for low, high in zip(frequencies, frequencies[1:]))
    assert frequencies[0] == 0.0
    assert frequencies[-1] == 1.0


def test_staged_rewards_do_not_move_threshold_until_commit():
    buffers = RewardBuffers(capacity=10)
    for reward in BUFFER:
        buffers.stage(reward)

    assert buffers.threshold(75) == 0.0

    buffers.commit()
    buffers.stage(0.1)

    assert buffers.threshold(75) == 0.7
    assert buffers.staging == (0.5, 0.6, 0.7, 0.8, 0.1)


def test_staging_buffer_drops_oldest_rewards():
    buffers = RewardBuffers(capacity=3)
    for reward in BUFFER:
        buffers.stage(reward)
    buffers.commit()

    assert buffers.committed == (0.6, 0.7, 0.8)


def test_buffers_restore_from_checkpoint_data():
    buffers = RewardBuffers(capacity=4)
    for reward in BUFFER:
        buffers.stage(reward)
    buffers.commit()

    restored = RewardBuffers.from_dict(buffers.as_dict(), capacity=4)

    assert restored.committed == buffers.committed
    assert restored.staging == buffers.staging
    assert restored.threshold(75) == 0.7


def test_sample_buffer_clears():
    samples = SampleBuffer()
    samples.extend([object(), object()])

    assert len(samples) == 2

    samples.clear()

    assert len(samples) == 0
