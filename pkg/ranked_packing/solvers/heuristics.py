import logging
from typing import (
    Iterable,
    List,
    Optional,
)

import numpy as np

from ranked_packing.enums import (
    SolverEnum,
)
from ranked_packing.packing.instances import (
    Instance,
    Item,
)
from ranked_packing.packing.solutions import (
    PackingSolution,
    SolutionRecorder,
)
from ranked_packing.packing.states import (
    Action,
    PackState,
)


logger = logging.getLogger(__name__)


def hvraa_order(instance: Instance) -> List[Item]:
    """
    Порядок HVRAA: h по убыванию, затем w по убыванию, затем id
    """
    return sorted(instance.items, key=lambda item: (-item.h, -item.w, item.id))


def lego_order(instance: Instance) -> List[Item]:
    """
    Порядок Lego: w по убыванию, затем h по убыванию, затем id
    """
    return sorted(instance.items, key=lambda item: (-item.w, -item.h, item.id))


def min_height_action(
    state: PackState,
    item: Item,
) -> Optional[Action]:
    """
    Допустимое размещение предмета с минимальной итоговой H~, при равенстве
    самое левое. None, если предмет разместить нельзя
    """
    best_action = None
    best_height = None

    for action in state.legal_actions():
        if action.item_id != item.id:
            continue

        rows = state.grid.allocate_rows(item.id, action.x, item.w, item.h)
        height = max(state.h_tilde, rows[-1] + 1)

        if best_height is None or height < best_height:
            best_action = action
            best_height = height

    return best_action


def stacking_action(
    state: PackState,
    item: Item,
) -> Optional[Action]:
    """
    Установка предмета поверх стопки уже размещенных предметов той же ширины.

    Выбирается стопка с самой низкой вершиной, при равенстве самая левая.
    None, если таких стопок нет или ни на одну поставить нельзя.
    """
    tops = {}
    for placed_id, (x, rows) in state.grid.placements.items():
        if state.instance.items[placed_id].w == item.w:
            tops[x] = max(tops.get(x, 0), rows[-1] + 1)

    legal = set(state.legal_actions())

    for top, x in sorted((top, x) for x, top in tops.items()):
        action = Action(item_id=item.id, x=x)
        if action in legal:
            return action

    return None


def _solve_in_order(
    recorder: SolutionRecorder,
    order: Iterable[Item],
    stack_equal_widths: bool = False,
) -> PackingSolution:
    for item in order:
        action = None

        if stack_equal_widths:
            action = stacking_action(recorder.state, item)

        if action is None:
            action = min_height_action(recorder.state, item)

        if action is None:
            logger.debug('Предмет %d не помещается, упаковка прервана', item.id)

            break

        recorder.apply(action)

    return recorder.solution()


def place_in_order(
    instance: Instance,
    order: Iterable[Item],
    height: Optional[int] = None,
    adjacency: bool = False,
    solver: str = '',
) -> PackingSolution:
    """
    Жадное размещение предметов в заданном порядке по правилу минимальной
    итоговой H~
    """
    recorder = SolutionRecorder(
        state=PackState.initial(instance, height=height, adjacency=adjacency),
        solver=solver,
    )

    return _solve_in_order(recorder, order)


def hvraa_solve(
    instance: Instance,
    height: Optional[int] = None,
) -> PackingSolution:
    return place_in_order(
        instance,
        hvraa_order(instance),
        height=height,
        solver=SolverEnum.HVRAA,
    )


def lego_solve(
    instance: Instance,
    height: Optional[int] = None,
) -> PackingSolution:
    recorder = SolutionRecorder(
        state=PackState.initial(instance, height=height),
        solver=SolverEnum.LEGO,
    )

    return _solve_in_order(recorder, lego_order(instance), stack_equal_widths=True)


def random_solve(
    instance: Instance,
    seed: int = 0,
    height: Optional[int] = None,
    generator: Optional[np.random.Generator] = None,
) -> PackingSolution:
    """
    Равновероятный выбор допустимого действия на каждом шаге
    """
    generator = generator if generator is not None else np.random.default_rng(seed)
    recorder = SolutionRecorder(
        state=PackState.initial(instance, height=height),
        solver=SolverEnum.RANDOM,
    )

    while not recorder.state.is_terminal:
        actions = recorder.state.legal_actions()
        recorder.apply(actions[int(generator.integers(len(actions)))])

    return recorder.solution()
