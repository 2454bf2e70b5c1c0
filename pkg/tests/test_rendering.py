from ranked_packing.packing.instances import (
    make_instance,
)
from ranked_packing.rendering import (
    ItemSlice,
    item_color,
    item_slices,
    render_solution,
    row_runs,
)
from ranked_packing.solvers.heuristics import (
    hvraa_solve,
)


def test_row_runs_split_gaps():
    assert row_runs([3, 0, 2]) == [(0, 1), (2, 2)]
    assert row_runs([]) == []


def test_non_contiguous_item_is_drawn_in_slices():
    instance = make_instance([(2, 3)], w_star=4)

    slices = item_slices(instance, [{'item': 0, 'x': 1, 'rows': [0, 2, 3]}])

    assert slices == [
        ItemSlice(item_id=0, x=1, y=0, w=2, h=1),
        ItemSlice(item_id=0, x=1, y=2, w=2, h=2),
    ]
    assert {item_slice.color for item_slice in slices} == {item_color(0)}


def test_svg_is_reproducible(three_items):
    solution = hvraa_solve(three_items)

    svg = render_solution(solution)

    assert svg.lstrip().startswith('<?xml')
    assert '<svg' in svg
    assert render_solution(solution) == svg
