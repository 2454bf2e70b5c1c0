from dataclasses import (
    dataclass,
    field,
)
from fractions import (
    Fraction,
)
from pathlib import (
    Path,
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

from ranked_packing.exceptions import (
    InstanceError,
)
from ranked_packing.strings import (
    INSTANCE_EMPTY_ERROR,
    INSTANCE_FILE_FORMAT_ERROR,
    INSTANCE_IDS_ERROR,
    ITEM_SIZE_ERROR,
    SLICING_RANGE_ERROR,
    WIDTH_BUDGET_ERROR,
)
from ranked_packing.utils import (
    read_json,
    to_json,
)


@dataclass(frozen=True)
class Item:
    """
    Запрос RU: w - время обработки в единицах времени, h - ресурсные единицы
    """
    id: int
    w: int
    h: int

    @property
    def area(self) -> int:
        return self.w * self.h


@dataclass(frozen=True)
class Instance:
    """
    Экземпляр задачи: пакет предметов и бюджет задержки W*.

    height - необязательная виртуальная высота H' (по умолчанию H' = W*),
    h_star_target - высота, использованная при нарезке экземпляра.
    """
    items: Tuple[Item, ...]
    w_star: int
    seed: int = 0
    height: Optional[int] = None
    h_star_target: Optional[int] = None
    name: str = field(default='', compare=False)

    @property
    def n_items(self) -> int:
        return len(self.items)

    @property
    def total_area(self) -> int:
        return sum(item.area for item in self.items)

    @property
    def virtual_height(self) -> int:
        return self.height if self.height is not None else self.w_star

    def as_dict(self) -> Dict[str, Any]:
        data = {
            'w_star': self.w_star,
            'items': [
                {'w': item.w, 'h': item.h}
                for item in self.items
            ],
            'seed': self.seed,
        }

        if self.height is not None:
            data['height'] = self.height

        if self.h_star_target is not None:
            data['h_star_target'] = self.h_star_target

        return data

    @classmethod
    def from_dict(
        cls,
        data: Dict[str, Any],
        name: str = '',
    ) -> 'Instance':
        try:
            items = tuple(
                Item(id=index, w=int(item['w']), h=int(item['h']))
                for index, item in enumerate(data['items'])
            )
            instance = cls(
                items=items,
                w_star=int(data['w_star']),
                seed=int(data.get('seed', 0)),
                height=int(data['height']) if data.get('height') is not None else None,
                h_star_target=(
                    int(data['h_star_target']) if data.get('h_star_target') is not None else None
                ),
                name=name,
            )
        except (KeyError, TypeError, ValueError) as exception:
            raise InstanceError(
                INSTANCE_FILE_FORMAT_ERROR.format(path=name or '<dict>', reason=exception)
            )

        return instance


def make_instance(
    sizes: Sequence[Tuple[int, int]],
    w_star: int,
    seed: int = 0,
    height: Optional[int] = None,
) -> Instance:
    """
    Экземпляр из списка размеров (w, h), id назначаются по порядку
    """
    return Instance(
        items=tuple(
            Item(id=index, w=w, h=h)
            for index, (w, h) in enumerate(sizes)
        ),
        w_star=w_star,
        seed=seed,
        height=height,
    )


def validate_instance(
    instance: Instance,
    height: Optional[int] = None,
):
    """
    Проверка инвариантов экземпляра. Выбрасывает InstanceError
    """
    height = height if height is not None else instance.virtual_height

    if instance.w_star < 1:
        raise InstanceError(WIDTH_BUDGET_ERROR.format(w_star=instance.w_star))

    if not instance.items:
        raise InstanceError(INSTANCE_EMPTY_ERROR)

    if [item.id for item in instance.items] != list(range(instance.n_items)):
        raise InstanceError(INSTANCE_IDS_ERROR)

    for item in instance.items:
        if not (1 <= item.w <= instance.w_star and 1 <= item.h <= height):
            raise InstanceError(
                ITEM_SIZE_ERROR.format(
                    item_id=item.id,
                    w=item.w,
                    h=item.h,
                    w_star=instance.w_star,
                    height=height,
                )
            )


def h_star(instance: Instance) -> Fraction:
    """
    Нижняя граница высоты: max(суммарная площадь / W*, max h_i), без округления
    """
    return max(
        Fraction(instance.total_area, instance.w_star),
        Fraction(max(item.h for item in instance.items)),
    )


def generate_sliced_instance(
    w_star: int,
    h_star: int,
    n_items: int,
    seed: int,
    height: Optional[int] = None,
) -> Instance:
    """
    Экземпляр, полученный гильотинными разрезами прямоугольника W* x H*.

    На каждом шаге равновероятно выбирается прямоугольник, который можно
    разрезать, равновероятно ось среди сторон длиной не меньше 2 и
    равновероятно целая позиция разреза внутри стороны. Прямоугольник
    заменяется двумя частями на его же месте в списке.
    """
    if w_star < 1 or h_star < 1 or not 1 <= n_items <= w_star * h_star:
        raise InstanceError(
            SLICING_RANGE_ERROR.format(w_star=w_star, h_star=h_star, n_items=n_items)
        )

    generator = np.random.default_rng(seed)
    rectangles: List[Tuple[int, int]] = [(w_star, h_star)]

    for _ in range(n_items - 1):
        splittable = [
            index
            for index, (w, h) in enumerate(rectangles)
            if w >= 2 or h >= 2
        ]
        index = splittable[int(generator.integers(len(splittable)))]
        w, h = rectangles[index]

        axes = [
            axis
            for axis, side in ((0, w), (1, h))
            if side >= 2
        ]
        axis = axes[int(generator.integers(len(axes)))]

        if axis == 0:
            cut = int(generator.integers(1, w))
            halves = [(cut, h), (w - cut, h)]
        else:
            cut = int(generator.integers(1, h))
            halves = [(w, cut), (w, h - cut)]

        rectangles[index:index + 1] = halves

    instance = make_instance(rectangles, w_star=w_star, seed=seed, height=height)

    return Instance(
        items=instance.items,
        w_star=w_star,
        seed=seed,
        height=height,
        h_star_target=h_star,
    )


def read_instance(path: Union[str, Path]) -> Instance:
    path = Path(path)

    return Instance.from_dict(read_json(path), name=path.stem)


def dump_instance(instance: Instance) -> str:
    return to_json(instance.as_dict())
