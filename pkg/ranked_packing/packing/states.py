from fractions import (
    Fraction,
)
from typing import (
    Iterable,
    List,
    NamedTuple,
    Optional,
    Tuple,
)

import numpy as np

from ranked_packing.exceptions import (
    DeadStateError,
    IllegalActionError,
)
from ranked_packing.packing.grids import (
    OccupancyGrid,
)
from ranked_packing.packing.instances import (
    Instance,
    h_star,
)
from ranked_packing.strings import (
    DEAD_STATE_UTILIZATION_ERROR,
    ILLEGAL_ACTION_ERROR,
)


class Action(NamedTuple):
    """
    Действие <i, x_i>: предмет и левая граница по оси времени
    """
    item_id: int
    x: int


class PackState:
    """
    Состояние MDP: сетка занятости, экземпляр и признаки упакованности.

    Состояние не изменяется после создания, step возвращает новое состояние.
    """

    def __init__(
        self,
        instance: Instance,
        grid: OccupancyGrid,
        packed: np.ndarray,
        adjacency: bool = False,
        h_star_value: Optional[Fraction] = None,
    ):
        self.instance = instance
        self.grid = grid
        self.packed = packed
        self.adjacency = adjacency
        self.h_star = h_star_value if h_star_value is not None else h_star(instance)

        self._legal_actions: Optional[List[Action]] = None

    @classmethod
    def initial(
        cls,
        instance: Instance,
        height: Optional[int] = None,
        adjacency: bool = False,
    ) -> 'PackState':
        height = height if height is not None else instance.virtual_height

        return cls(
            instance=instance,
            grid=OccupancyGrid(width=instance.w_star, height=height),
            packed=np.zeros(instance.n_items, dtype=bool),
            adjacency=adjacency,
        )

    def __repr__(self):
        return (
            f'<{self.__class__.__name__} @step="{self.step}" '
            f'@n_items="{self.instance.n_items}" @h_tilde="{self.grid.h_tilde}">'
        )

    @property
    def step(self) -> int:
        return int(self.packed.sum())

    @property
    def width(self) -> int:
        return self.grid.width

    @property
    def height(self) -> int:
        return self.grid.height

    @property
    def action_space(self) -> int:
        return self.instance.n_items * self.grid.width

    @property
    def all_packed(self) -> bool:
        return bool(self.packed.all())

    @property
    def is_terminal(self) -> bool:
        return self.all_packed or not self.legal_actions()

    @property
    def is_dead(self) -> bool:
        return self.is_terminal and not self.all_packed

    @property
    def h_tilde(self) -> int:
        return self.grid.h_tilde

    def key(self) -> Tuple[bytes, bytes]:
        return self.grid.key(), np.packbits(self.packed).tobytes()

    def legal_actions(self) -> List[Action]:
        if self._legal_actions is None:
            self._legal_actions = list(_enumerate_legal_actions(self))

        return self._legal_actions

    def reward(self) -> float:
        """
        H* / H~ в терминальном состоянии со всеми упакованными предметами, иначе 0
        """
        if not self.all_packed:
            return 0.0

        return float(self.h_star / self.grid.h_tilde)


def action_index(
    action: Action,
    width: int,
) -> int:
    return action.item_id * width + action.x


def index_action(
    index: int,
    width: int,
) -> Action:
    return Action(item_id=int(index) // width, x=int(index) % width)


def _adjacent(
    grid: OccupancyGrid,
    x: int,
    w: int,
) -> bool:
    """
    Правило примыкания: край сетки или занятая клетка в соседнем столбце
    """
    return (
        x == 0 or
        x + w == grid.width or
        grid.column_occupied(x - 1) or
        grid.column_occupied(x + w)
    )


def _enumerate_legal_actions(state: PackState) -> Iterable[Action]:
    grid = state.grid

    for item in state.instance.items:
        if state.packed[item.id]:
            continue

        for x in range(grid.width - item.w + 1):
            if state.adjacency and not _adjacent(grid, x, item.w):
                continue

            if grid.can_allocate(x, item.w, item.h):
                yield Action(item_id=item.id, x=x)


def legal_actions(state: PackState) -> List[Action]:
    """
    Все допустимые действия состояния, пустой список в тупиковом состоянии
    """
    return list(state.legal_actions())


def legal_mask(state: PackState) -> np.ndarray:
    """
    Маска допустимых действий длины N * W'
    """
    mask = np.zeros(state.action_space, dtype=bool)

    for action in state.legal_actions():
        mask[action_index(action, state.width)] = True

    return mask


def allocate_rows(
    grid: OccupancyGrid,
    action: Action,
    instance: Instance,
) -> List[int]:
    """
    h самых нижних строк, свободных на всем отрезке действия
    """
    item = instance.items[action.item_id]

    return grid.allocate_rows(item.id, action.x, item.w, item.h)


def step(
    state: PackState,
    action: Action,
) -> Tuple[PackState, float, bool]:
    """
    Переход MDP. Возвращает новое состояние, награду и признак завершения
    """
    if action not in state.legal_actions():
        raise IllegalActionError(
            ILLEGAL_ACTION_ERROR.format(item_id=action.item_id, x=action.x)
        )

    item = state.instance.items[action.item_id]
    rows = state.grid.allocate_rows(item.id, action.x, item.w, item.h)

    grid = state.grid.copy()
    grid.place(item.id, action.x, item.w, rows)

    packed = state.packed.copy()
    packed[item.id] = True

    next_state = PackState(
        instance=state.instance,
        grid=grid,
        packed=packed,
        adjacency=state.adjacency,
        h_star_value=state.h_star,
    )
    done = next_state.is_terminal

    return next_state, (next_state.reward() if done else 0.0), done


def encode_state(
    state: PackState,
    dtype=np.float32,
) -> np.ndarray:
    """
    Тензор (N + 1, H', W'): плоскость занятости и плоскости неупакованных
    предметов, прижатых к левому нижнему углу
    """
    planes = np.zeros(
        (state.instance.n_items + 1, state.height, state.width),
        dtype=dtype,
    )
    planes[0] = state.grid.cells

    for item in state.instance.items:
        if not state.packed[item.id]:
            planes[item.id + 1, :item.h, :item.w] = 1

    return planes


def utilization(state: PackState) -> float:
    """
    Суммарная площадь предметов / (W~ * H~)
    """
    if not state.all_packed or state.h_tilde == 0:
        raise DeadStateError(DEAD_STATE_UTILIZATION_ERROR)

    return float(
        Fraction(state.instance.total_area, state.width * state.h_tilde)
    )


def replay(
    instance: Instance,
    actions: Iterable[Action],
    height: Optional[int] = None,
    adjacency: bool = False,
) -> PackState:
    """
    Состояние после последовательного применения действий
    """
    state = PackState.initial(instance, height=height, adjacency=adjacency)

    for action in actions:
        state, _, _ = step(state, Action(*action))

    return state
