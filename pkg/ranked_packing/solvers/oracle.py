import logging
import math
from dataclasses import (
    dataclass,
)
from typing import (
    Dict,
    List,
    Optional,
    Tuple,
)

from ranked_packing.consts import (
    DEFAULT_ORACLE_NODE_LIMIT,
)
from ranked_packing.exceptions import (
    OracleBudgetExceededError,
    OracleInfeasibleError,
)
from ranked_packing.packing.instances import (
    Instance,
)
from ranked_packing.packing.states import (
    Action,
    PackState,
    step,
)
from ranked_packing.strings import (
    ORACLE_BUDGET_EXCEEDED_ERROR,
    ORACLE_INFEASIBLE_ERROR,
)


logger = logging.getLogger(__name__)

_UNREACHABLE = math.inf


@dataclass(frozen=True)
class OracleResult:
    """
    Минимальная высота, последовательность действий, на которой она
    достигается, и количество раскрытых узлов
    """
    min_height: int
    witness: Tuple[Action, ...]
    nodes_expanded: int


@dataclass
class _MemoEntry:
    # Точное значение или нижняя граница, если поиск был отсечен
    value: float
    exact: bool
    action: Optional[Action] = None


class ExactSearch:
    """
    Поиск в глубину по последовательностям допустимых действий с отсечением
    по нижней границе и мемоизацией по (сетка, множество упакованных).

    Значение узла - минимальная итоговая H~ среди всех завершений. Поиск
    ведется в окне "строго меньше bound": если лучшее завершение не меньше
    bound, возвращается нижняя граница без гарантии точности.
    """

    def __init__(
        self,
        instance: Instance,
        h_cap: int,
        node_limit: int = DEFAULT_ORACLE_NODE_LIMIT,
    ):
        self._instance = instance
        self._h_cap = h_cap
        self._node_limit = node_limit

        self._area_bound = math.ceil(instance.total_area / instance.w_star)
        self._memo: Dict[Tuple[bytes, bytes], _MemoEntry] = {}
        self._nodes_expanded = 0

    def _lower_bound(self, state: PackState) -> int:
        unpacked_heights = [
            item.h
            for item in self._instance.items
            if not state.packed[item.id]
        ]

        return max(
            self._area_bound,
            max(unpacked_heights, default=0),
            state.h_tilde,
        )

    def _branch_actions(self, state: PackState) -> List[Action]:
        """
        Допустимые действия без повторов: из одинаковых по (w, h)
        неупакованных предметов ветвится только предмет с меньшим id
        """
        representatives = {}
        for item in self._instance.items:
            if not state.packed[item.id]:
                representatives.setdefault((item.w, item.h), item.id)

        allowed = set(representatives.values())

        return [
            action
            for action in state.legal_actions()
            if action.item_id in allowed
        ]

    def _search(
        self,
        state: PackState,
        bound: float,
    ) -> float:
        if state.all_packed:
            return state.h_tilde

        key = state.key()
        entry = self._memo.get(key)
        if entry is not None and (entry.exact or entry.value >= bound):
            return entry.value

        lower_bound = self._lower_bound(state)
        if lower_bound >= bound:
            self._memo[key] = _MemoEntry(value=lower_bound, exact=False)

            return lower_bound

        self._nodes_expanded += 1
        if self._nodes_expanded > self._node_limit:
            raise OracleBudgetExceededError(
                ORACLE_BUDGET_EXCEEDED_ERROR.format(node_limit=self._node_limit)
            )

        best_value = _UNREACHABLE
        best_action = None
        window = bound

        for action in self._branch_actions(state):
            child, _, _ = step(state, action)
            value = self._search(child, window)

            if value < window:
                best_value = value
                best_action = action
                window = value

                if value <= lower_bound:
                    break

        if best_action is not None:
            entry = _MemoEntry(value=best_value, exact=True, action=best_action)
        elif not state.legal_actions():
            entry = _MemoEntry(value=_UNREACHABLE, exact=True)
        else:
            entry = _MemoEntry(value=bound, exact=False)

        self._memo[key] = entry

        return entry.value

    def _witness(self, state: PackState) -> Tuple[Action, ...]:
        actions = []
        while not state.all_packed:
            action = self._memo[state.key()].action
            actions.append(action)
            state, _, _ = step(state, action)

        return tuple(actions)

    def solve(self) -> OracleResult:
        root = PackState.initial(self._instance, height=self._h_cap)
        value = self._search(root, self._h_cap + 1)

        if value > self._h_cap:
            raise OracleInfeasibleError(ORACLE_INFEASIBLE_ERROR.format(h_cap=self._h_cap))

        result = OracleResult(
            min_height=int(value),
            witness=self._witness(root),
            nodes_expanded=self._nodes_expanded,
        )

        logger.debug(
            'Точный решатель: H~=%d, узлов %d, записей памяти %d',
            result.min_height,
            result.nodes_expanded,
            len(self._memo),
        )

        return result


def solve_exact(
    instance: Instance,
    h_cap: Optional[int] = None,
    node_limit: int = DEFAULT_ORACLE_NODE_LIMIT,
) -> OracleResult:
    """
    Точная минимальная высота упаковки под ограничением h_cap
    (по умолчанию виртуальная высота экземпляра)
    """
    h_cap = h_cap if h_cap is not None else instance.virtual_height

    return ExactSearch(instance, h_cap=h_cap, node_limit=node_limit).solve()
