import io
from dataclasses import (
    dataclass,
)
from pathlib import (
    Path,
)
from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Sequence,
    Tuple,
    Union,
)

import matplotlib


matplotlib.use('Agg')

from matplotlib.figure import (  # noqa: E402
    Figure,
)
from matplotlib.patches import (  # noqa: E402
    Rectangle,
)

from ranked_packing.consts import (  # noqa: E402
    ITEM_PALETTE,
)
from ranked_packing.packing.instances import (  # noqa: E402
    Instance,
)
from ranked_packing.packing.solutions import (  # noqa: E402
    PackingSolution,
    load_packing,
)


# Размер клетки сетки на рисунке, дюймы
CELL_INCHES = 0.4

# Соль идентификаторов SVG, одинаковая для всех рисунков
SVG_HASH_SALT = 'ranked-packing'


@dataclass(frozen=True)
class ItemSlice:
    """
    Непрерывный по строкам фрагмент размещенного предмета
    """
    item_id: int
    x: int
    y: int
    w: int
    h: int

    @property
    def color(self) -> str:
        return item_color(self.item_id)


def item_color(item_id: int) -> str:
    return ITEM_PALETTE[item_id % len(ITEM_PALETTE)]


def row_runs(rows: Iterable[int]) -> List[Tuple[int, int]]:
    """
    Разбиение возрастающего списка строк на пары (начало, длина)
    """
    runs: List[Tuple[int, int]] = []
    for row in sorted(rows):
        if runs and runs[-1][0] + runs[-1][1] == row:
            start, length = runs[-1]
            runs[-1] = (start, length + 1)
        else:
            runs.append((row, 1))

    return runs


def item_slices(
    instance: Instance,
    placements: Sequence[Dict[str, Any]],
) -> List[ItemSlice]:
    """
    Фрагменты предметов по размещениям файла результата упаковки
    """
    widths = {item.id: item.w for item in instance.items}

    return [
        ItemSlice(
            item_id=int(placement['item']),
            x=int(placement['x']),
            y=start,
            w=widths[int(placement['item'])],
            h=length,
        )
        for placement in placements
        for start, length in row_runs(placement['rows'])
    ]


def render_packing(
    instance: Instance,
    placements: Sequence[Dict[str, Any]],
    h_tilde: int,
    height: int,
) -> str:
    """
    SVG упаковки: фрагменты одного предмета одного цвета, пунктирный контур
    оптимизированного контейнера W~ x H~
    """
    width = instance.w_star
    slices = item_slices(instance, placements)

    matplotlib.rcParams['svg.hashsalt'] = SVG_HASH_SALT

    figure = Figure(figsize=(max(width, 2) * CELL_INCHES + 1, max(height, 2) * CELL_INCHES + 1))
    axes = figure.add_subplot(1, 1, 1)

    axes.add_patch(Rectangle((0, 0), width, height, fill=False, edgecolor='#cccccc', linewidth=0.8))

    for item_slice in slices:
        axes.add_patch(
            Rectangle(
                (item_slice.x, item_slice.y),
                item_slice.w,
                item_slice.h,
                facecolor=item_slice.color,
                edgecolor='black',
                linewidth=0.8,
            )
        )
        axes.annotate(
            str(item_slice.item_id),
            (item_slice.x + item_slice.w / 2, item_slice.y + item_slice.h / 2),
            ha='center',
            va='center',
            fontsize=8,
        )

    if h_tilde > 0:
        axes.add_patch(
            Rectangle(
                (0, 0),
                width,
                h_tilde,
                fill=False,
                edgecolor='black',
                linestyle='--',
                linewidth=1.5,
            )
        )

    axes.set_xlim(0, width)
    axes.set_ylim(0, height)
    axes.set_aspect('equal')
    axes.set_xticks(range(width + 1))
    axes.set_yticks(range(height + 1))
    axes.tick_params(labelsize=6)
    axes.set_title(f'H~={h_tilde}, W~={width}')

    buffer = io.StringIO()
    figure.savefig(buffer, format='svg', metadata={'Date': None})

    return buffer.getvalue()


def render_solution(solution: PackingSolution) -> str:
    data = solution.as_dict()

    return render_packing(solution.instance, data['placements'], data['h_tilde'], data['height'])


def render_packing_file(path: Union[str, Path]) -> str:
    """
    SVG по файлу результата упаковки
    """
    instance, data = load_packing(path)

    return render_packing(
        instance,
        data['placements'],
        int(data['h_tilde']),
        int(data.get('height') or instance.virtual_height),
    )
