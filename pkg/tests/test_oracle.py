import math

import pytest

from ranked_packing.exceptions import (
    OracleBudgetExceededError,
    OracleInfeasibleError,
)
from ranked_packing.packing.instances import (
    generate_sliced_instance,
    h_star,
    make_instance,
)
from ranked_packing.packing.states import (
    replay,
)
from ranked_packing.solvers.heuristics import (
    hvraa_solve,
    lego_solve,
)
from ranked_packing.solvers.oracle import (
    solve_exact,
)


def test_single_item_height():
    assert solve_exact(make_instance([(3, 5)], w_star=5)).min_height == 5


def test_two_unit_items_side_by_side(two_unit_items):
    result = solve_exact(two_unit_items)

    assert result.min_height == 1
    assert replay(two_unit_items, result.witness).h_tilde == 1


def test_witness_reaches_minimum_height(three_items):
    result = solve_exact(three_items)

    state = replay(three_items, result.witness, height=three_items.virtual_height)

    assert result.min_height == 3
    assert state.all_packed
    assert state.h_tilde == 3
    assert result.nodes_expanded >= 1


def test_infeasible_instance_raises():
    instance = make_instance([(1, 2), (2, 1)], w_star=2)

    with pytest.raises(OracleInfeasibleError):
        solve_exact(instance)


def test_node_limit_is_enforced(three_items):
    with pytest.raises(OracleBudgetExceededError):
        solve_exact(three_items, node_limit=0)


def test_height_cap_below_optimum_is_infeasible(three_items):
    with pytest.raises(OracleInfeasibleError):
        solve_exact(three_items, h_cap=2)


@pytest.mark.parametrize('seed', range(5))
def test_oracle_bounds_heuristics(seed):
    instance = generate_sliced_instance(w_star=4, h_star=4, n_items=4, seed=seed)

    result = solve_exact(instance)

    assert result.min_height >= math.ceil(h_star(instance))
    for solution in (hvraa_solve(instance), lego_solve(instance)):
        if solution.state.all_packed:
            assert result.min_height <= solution.h_tilde
