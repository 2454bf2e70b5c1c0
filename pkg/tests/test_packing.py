from fractions import (
    Fraction,
)

import numpy as np
import pytest

from ranked_packing.exceptions import (
    DeadStateError,
    IllegalActionError,
    InfeasibleAllocationError,
    InstanceError,
)
from ranked_packing.packing.grids import (
    OccupancyGrid,
)
from ranked_packing.packing.instances import (
    Instance,
    generate_sliced_instance,
    h_star,
    make_instance,
    validate_instance,
)
from ranked_packing.packing.solutions import (
    solution_from_actions,
)
from ranked_packing.packing.states import (
    Action,
    PackState,
    encode_state,
    legal_actions,
    legal_mask,
    replay,
    step,
    utilization,
)


def test_allocate_rows_on_empty_grid_takes_bottom_rows():
    grid = OccupancyGrid(width=5, height=5)

    assert grid.allocate_rows(0, x=0, w=3, h=2) == [0, 1]


def test_allocate_rows_skips_occupied_bottom_row():
    grid = OccupancyGrid(width=5, height=5)
    grid.place(0, x=0, w=5, rows=[0])

    assert grid.allocate_rows(1, x=1, w=2, h=2) == [1, 2]


def test_allocate_rows_may_be_non_contiguous():
    grid = OccupancyGrid(width=5, height=5)
    grid.place(0, x=0, w=5, rows=[1])

    assert grid.allocate_rows(1, x=0, w=2, h=2) == [0, 2]


def test_allocate_rows_does_not_change_grid():
    grid = OccupancyGrid(width=3, height=3)
    grid.allocate_rows(0, x=0, w=2, h=2)

    assert grid.occupied == 0
    assert grid.h_tilde == 0


def test_allocate_rows_raises_below_virtual_height():
    grid = OccupancyGrid(width=2, height=2)
    grid.place(0, x=0, w=1, rows=[0])

    with pytest.raises(InfeasibleAllocationError):
        grid.allocate_rows(1, x=0, w=2, h=2)


def test_h_tilde_is_one_above_highest_occupied_row():
    grid = OccupancyGrid(width=4, height=6)
    grid.place(0, x=1, w=2, rows=[0, 2])

    assert grid.h_tilde == 3
    assert grid.occupied == 4


def test_h_star_examples():
    assert h_star(make_instance([(3, 5)], w_star=15)) == 5
    assert h_star(make_instance([(5, 2), (5, 2)], w_star=5)) == 4
    assert h_star(make_instance([(2, 1), (1, 1)], w_star=2)) == Fraction(3, 2)


def test_sliced_instance_tiles_the_rectangle():
    instance = generate_sliced_instance(w_star=15, h_star=7, n_items=10, seed=42)

    assert instance.n_items == 10
    assert instance.total_area == 105
    assert h_star(instance) == 7
    assert instance.h_star_target == 7
    assert all(1 <= item.w <= 15 and 1 <= item.h <= 7 for item in instance.items)


def test_sliced_instance_depends_only_on_seed():
    first = generate_sliced_instance(w_star=8, h_star=5, n_items=6, seed=7)
    second = generate_sliced_instance(w_star=8, h_star=5, n_items=6, seed=7)

    assert first == second


def test_sliced_instance_rejects_too_many_items():
    with pytest.raises(InstanceError):
        generate_sliced_instance(w_star=2, h_star=2, n_items=5, seed=0)


def test_validate_instance_rejects_wide_item():
    with pytest.raises(InstanceError):
        validate_instance(make_instance([(6, 1)], w_star=5))


def test_validate_instance_rejects_item_above_virtual_height():
    with pytest.raises(InstanceError):
        validate_instance(make_instance([(1, 4)], w_star=5, height=3))


def test_validate_instance_rejects_empty_instance():
    with pytest.raises(InstanceError):
        validate_instance(Instance(items=(), w_star=5))


def test_instance_from_dict_reports_format_error():
    with pytest.raises(InstanceError):
        Instance.from_dict({'items': [{'w': 1}]})


def test_initial_legal_actions_count():
    state = PackState.initial(make_instance([(3, 2), (2, 1)], w_star=5))

    assert len(legal_actions(state)) == 7
    assert legal_mask(state).shape == (10, )
    assert int(legal_mask(state).sum()) == 7


def test_step_rewards_only_terminal_state(two_unit_items):
    state = PackState.initial(two_unit_items)

    state, reward, done = step(state, Action(0, 0))
    assert (reward, done) == (0.0, False)

    state, reward, done = step(state, Action(1, 1))
    assert done
    assert reward == 1.0
    assert state.h_tilde == 1


def test_step_stacking_halves_reward(two_unit_items):
    state = replay(two_unit_items, [(0, 0)])

    state, reward, done = step(state, Action(1, 0))

    assert done
    assert state.h_tilde == 2
    assert reward == 0.5


def test_step_rejects_action_outside_grid(three_items):
    state = PackState.initial(three_items)

    with pytest.raises(IllegalActionError):
        step(state, Action(0, 3))


def test_step_rejects_packed_item(two_unit_items):
    state = replay(two_unit_items, [(0, 0)])

    with pytest.raises(IllegalActionError):
        step(state, Action(0, 1))


def test_step_does_not_mutate_state(two_unit_items):
    state = PackState.initial(two_unit_items)
    step(state, Action(0, 0))

    assert state.grid.occupied == 0
    assert not state.packed.any()


def test_dead_state_is_terminal_with_zero_reward():
    instance = make_instance([(2, 2), (2, 2)], w_star=2, height=3)

    state, reward, done = step(PackState.initial(instance), Action(0, 0))

    assert done
    assert state.is_dead
    assert reward == 0.0
    with pytest.raises(DeadStateError):
        utilization(state)


def test_utilization_of_complete_packing():
    instance = make_instance([(15, 5), (6, 5)], w_star=15)

    state = replay(instance, [(0, 0), (1, 0)])

    assert state.h_tilde == 10
    assert utilization(state) == pytest.approx(0.7)


def test_adjacency_rule_limits_first_placements():
    instance = make_instance([(1, 1)], w_star=4)

    state = PackState.initial(instance, adjacency=True)

    assert [action.x for action in state.legal_actions()] == [0, 3]


def test_state_key_ignores_action_order(two_unit_items):
    first = replay(two_unit_items, [(0, 0), (1, 1)])
    second = replay(two_unit_items, [(1, 1), (0, 0)])

    assert first.key() == second.key()


def test_encode_state_planes(three_items):
    state = PackState.initial(three_items)

    planes = encode_state(state)

    assert planes.shape == (4, 5, 5)
    assert planes.dtype == np.float32
    assert not planes[0].any()
    assert planes[1].sum() == 6
    assert planes[1, :2, :3].all()

    packed = replay(three_items, [(1, 0)])
    planes = encode_state(packed)

    assert planes[0].sum() == 6
    assert not planes[2].any()


def test_solution_trace_records_rows(three_items):
    solution = solution_from_actions(three_items, [Action(1, 0), Action(0, 2), Action(2, 2)])

    data = solution.as_dict()

    assert data['placements'][2] == {'item': 2, 'x': 2, 'rows': [2]}
    assert data['h_tilde'] == 3
    assert data['status'] == 'packed'
    assert data['utilization'] == pytest.approx(14 / 15)


def _lowest_free_rows(cells, x, w):
    return [
        row
        for row in range(len(cells))
        if not any(cells[row][column] for column in range(x, x + w))
    ]


def test_allocate_rows_matches_row_scan(generator):
    for _ in range(1000):
        grid = OccupancyGrid(width=8, height=8)
        grid.cells = generator.random((8, 8)) < 0.3
        w = int(generator.integers(1, 9))
        x = int(generator.integers(0, 8 - w + 1))
        h = int(generator.integers(1, 9))

        expected = _lowest_free_rows(grid.cells.tolist(), x, w)

        if len(expected) >= h:
            assert grid.allocate_rows(0, x=x, w=w, h=h) == expected[:h]
        else:
            with pytest.raises(InfeasibleAllocationError):
                grid.allocate_rows(0, x=x, w=w, h=h)


@pytest.mark.parametrize('seed', range(0, 500, 7))
def test_sliced_instances_keep_area_and_count(seed):
    instance = generate_sliced_instance(w_star=15, h_star=7, n_items=10, seed=seed)

    assert instance.n_items == 10
    assert instance.total_area == 105
    assert all(item.w >= 1 and item.h >= 1 for item in instance.items)
