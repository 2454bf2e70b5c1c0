from typing import (
    Dict,
    List,
    Tuple,
)

import numpy as np

from ranked_packing.exceptions import (
    InfeasibleAllocationError,
)
from ranked_packing.strings import (
    INFEASIBLE_ALLOCATION_ERROR,
)


class OccupancyGrid:
    """
    Бинарная плоскость занятости H' x W'.

    Строка 0 - низ, столбец 0 - левый край. Для каждого размещенного предмета
    хранится x и возрастающий список занятых строк, строки предмета не обязаны
    идти подряд.
    """

    def __init__(
        self,
        width: int,
        height: int,
    ):
        self.width = width
        self.height = height
        self.cells = np.zeros((height, width), dtype=bool)
        self.placements: Dict[int, Tuple[int, Tuple[int, ...]]] = {}

    def __repr__(self):
        return (
            f'<{self.__class__.__name__} @size="{self.height}x{self.width}" '
            f'@placed="{len(self.placements)}" @h_tilde="{self.h_tilde}">'
        )

    def copy(self) -> 'OccupancyGrid':
        grid = OccupancyGrid.__new__(OccupancyGrid)
        grid.width = self.width
        grid.height = self.height
        grid.cells = self.cells.copy()
        grid.placements = dict(self.placements)

        return grid

    @property
    def h_tilde(self) -> int:
        """
        1 + индекс самой высокой занятой строки, 0 для пустой сетки
        """
        occupied_rows = np.flatnonzero(self.cells.any(axis=1))

        return int(occupied_rows[-1]) + 1 if occupied_rows.size else 0

    @property
    def occupied(self) -> int:
        return int(self.cells.sum())

    def free_rows(
        self,
        x: int,
        w: int,
    ) -> np.ndarray:
        """
        Индексы строк снизу вверх, у которых свободны все клетки столбцов [x, x + w)
        """
        return np.flatnonzero(~self.cells[:, x:x + w].any(axis=1))

    def allocate_rows(
        self,
        item_id: int,
        x: int,
        w: int,
        h: int,
    ) -> List[int]:
        """
        Физическое распределение ресурса под действие: h самых нижних строк,
        полностью свободных на отрезке [x, x + w). Сетка не изменяется.
        """
        rows = self.free_rows(x, w)

        if rows.size < h:
            raise InfeasibleAllocationError(
                INFEASIBLE_ALLOCATION_ERROR.format(
                    item_id=item_id,
                    x=x,
                    h=h,
                    available=int(rows.size),
                )
            )

        return [int(row) for row in rows[:h]]

    def can_allocate(
        self,
        x: int,
        w: int,
        h: int,
    ) -> bool:
        return self.free_rows(x, w).size >= h

    def place(
        self,
        item_id: int,
        x: int,
        w: int,
        rows: List[int],
    ):
        """
        Отметка строк rows занятыми в столбцах [x, x + w)
        """
        self.cells[rows, x:x + w] = True
        self.placements[item_id] = (x, tuple(rows))

    def column_occupied(self, column: int) -> bool:
        return bool(0 <= column < self.width and self.cells[:, column].any())

    def key(self) -> bytes:
        """
        Канонический ключ сетки для мемоизации: упакованная битовая матрица
        """
        return np.packbits(self.cells).tobytes()
