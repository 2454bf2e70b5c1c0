import pytest

from ranked_packing.enums import (
    PackingStatusEnum,
)
from ranked_packing.packing.instances import (
    make_instance,
)
from ranked_packing.solvers import (
    get_solver,
)
from ranked_packing.solvers.heuristics import (
    hvraa_order,
    hvraa_solve,
    lego_order,
    lego_solve,
    random_solve,
)


def test_hvraa_order_breaks_ties_by_width_then_id():
    instance = make_instance([(2, 3), (3, 3), (3, 3), (5, 1)], w_star=5)

    assert [item.id for item in hvraa_order(instance)] == [1, 2, 0, 3]


def test_lego_order_breaks_ties_by_height():
    instance = make_instance([(3, 2), (2, 3), (2, 1)], w_star=5)

    assert [item.id for item in lego_order(instance)] == [0, 1, 2]


def test_hvraa_reaches_lower_bound(three_items):
    solution = hvraa_solve(three_items)

    assert solution.as_dict()['placements'] == [
        {'item': 1, 'x': 0, 'rows': [0, 1, 2]},
        {'item': 0, 'x': 2, 'rows': [0, 1]},
        {'item': 2, 'x': 2, 'rows': [2]},
    ]
    assert solution.h_tilde == 3
    assert solution.reward == 1.0


def test_lego_stacks_equal_widths(three_items):
    solution = lego_solve(three_items)

    assert solution.as_dict()['placements'] == [
        {'item': 0, 'x': 0, 'rows': [0, 1]},
        {'item': 1, 'x': 3, 'rows': [0, 1, 2]},
        {'item': 2, 'x': 3, 'rows': [3]},
    ]
    assert solution.h_tilde == 4
    assert solution.reward == pytest.approx(0.75)


def test_random_solver_is_reproducible():
    instance = make_instance([(1, 1), (1, 2), (1, 1)], w_star=3)

    first = random_solve(instance, seed=11)
    second = random_solve(instance, seed=11)

    assert first.actions == second.actions
    assert first.state.all_packed


def test_heuristic_dead_end_reports_dead_status():
    instance = make_instance([(1, 2), (2, 1)], w_star=2)

    solution = hvraa_solve(instance)

    assert solution.status == PackingStatusEnum.DEAD
    assert solution.reward == 0.0
    assert solution.utilization is None
    assert len(solution.trace) == 1


@pytest.mark.parametrize('name', ['hvraa', 'lego', 'exact'])
def test_registered_solvers_pack_every_item(name, three_items, generator):
    solution = get_solver(name).solve(three_items, generator=generator)

    assert solution.solver == name
    assert solution.state.all_packed
    assert solution.h_tilde >= 3
    assert 0 < solution.reward <= 1.0
