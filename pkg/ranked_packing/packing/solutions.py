from dataclasses import (
    dataclass,
    field,
)
from pathlib import (
    Path,
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Tuple,
    Union,
)

from ranked_packing.enums import (
    PackingStatusEnum,
)
from ranked_packing.packing.instances import (
    Instance,
)
from ranked_packing.packing.states import (
    Action,
    PackState,
    step,
    utilization,
)
from ranked_packing.utils import (
    read_json,
    to_json,
)


@dataclass(frozen=True)
class TraceStep:
    """
    Шаг упаковки: действие, выделенные строки и H~ после шага
    """
    item_id: int
    x: int
    rows: Tuple[int, ...]
    h_tilde: int

    @property
    def action(self) -> Action:
        return Action(self.item_id, self.x)


@dataclass
class PackingSolution:
    """
    Итог работы решателя: конечное состояние и упорядоченная трасса размещений
    """
    state: PackState
    trace: List[TraceStep] = field(default_factory=list)
    solver: str = ''
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def instance(self) -> Instance:
        return self.state.instance

    @property
    def actions(self) -> List[Action]:
        return [trace_step.action for trace_step in self.trace]

    @property
    def status(self) -> str:
        return PackingStatusEnum.PACKED if self.state.all_packed else PackingStatusEnum.DEAD

    @property
    def reward(self) -> float:
        return self.state.reward()

    @property
    def h_tilde(self) -> int:
        return self.state.h_tilde

    @property
    def utilization(self) -> Optional[float]:
        return utilization(self.state) if self.state.all_packed else None

    def as_dict(self) -> Dict[str, Any]:
        """
        Результат упаковки в формате JSON-файла результата
        """
        return {
            'placements': [
                {
                    'item': trace_step.item_id,
                    'x': trace_step.x,
                    'rows': list(trace_step.rows),
                }
                for trace_step in self.trace
            ],
            'h_tilde': self.h_tilde,
            'reward': self.reward,
            'utilization': self.utilization,
            'status': self.status,
            'solver': self.solver,
            'h_star': float(self.state.h_star),
            'height': self.state.height,
            'instance': self.instance.as_dict(),
        }

    def dumps(self) -> str:
        return to_json(self.as_dict())


class SolutionRecorder:
    """
    Построитель решения: применяет действия к состоянию и пишет трассу
    """

    def __init__(
        self,
        state: PackState,
        solver: str = '',
    ):
        self._state = state
        self._trace: List[TraceStep] = []
        self._solver = solver

    @property
    def state(self) -> PackState:
        return self._state

    def apply(self, action: Action) -> Tuple[float, bool]:
        self._state, reward, done = step(self._state, action)
        x, rows = self._state.grid.placements[action.item_id]
        self._trace.append(
            TraceStep(
                item_id=action.item_id,
                x=x,
                rows=rows,
                h_tilde=self._state.h_tilde,
            )
        )

        return reward, done

    def solution(self, **extra) -> PackingSolution:
        return PackingSolution(
            state=self._state,
            trace=list(self._trace),
            solver=self._solver,
            extra=extra,
        )


def solution_from_actions(
    instance: Instance,
    actions: List[Action],
    solver: str = '',
    height: Optional[int] = None,
) -> PackingSolution:
    recorder = SolutionRecorder(
        state=PackState.initial(instance, height=height),
        solver=solver,
    )
    for action in actions:
        recorder.apply(action)

    return recorder.solution()


def load_packing(path: Union[str, Path]) -> Tuple[Instance, Dict[str, Any]]:
    """
    Чтение файла результата упаковки: экземпляр и словарь результата
    """
    data = read_json(path)

    return Instance.from_dict(data['instance'], name=Path(path).stem), data
