from typing import (
    Any,
    Dict,
    List,
    Optional,
)

import numpy as np

from ranked_packing.packing.states import (
    Action,
    PackState,
    action_index,
)


class SearchNode:
    """
    Узел дерева поиска.

    Статистики ребер хранятся массивами по допустимым действиям узла:
    N(s, a) - количество посещений, W(s, a) - суммарная ценность, P(s, a) -
    априорная вероятность. Дочерние узлы создаются при первом проходе ребра.
    """

    def __init__(self, state: PackState):
        self.state = state
        self.actions: List[Action] = list(state.legal_actions())

        count = len(self.actions)
        self.base_priors = np.full(count, 1.0 / count) if count else np.zeros(0)
        self.priors = self.base_priors.copy()
        self.visit_counts = np.zeros(count, dtype=np.int64)
        self.total_values = np.zeros(count, dtype=np.float64)
        self.children: Dict[int, 'SearchNode'] = {}

        self.expanded = False

    def __repr__(self):
        return (
            f'<{self.__class__.__name__} @step="{self.state.step}" '
            f'@actions="{len(self.actions)}" @visits="{self.visits}">'
        )

    @property
    def is_terminal(self) -> bool:
        return not self.actions

    @property
    def visits(self) -> int:
        """
        Посещение при раскрытии плюс посещения всех ребер
        """
        return 1 + int(self.visit_counts.sum())

    @property
    def mean_values(self) -> np.ndarray:
        """
        Q(s, a) = W / N для посещенных ребер, 0 для непосещенных
        """
        return np.divide(
            self.total_values,
            self.visit_counts,
            out=np.zeros_like(self.total_values),
            where=self.visit_counts > 0,
        )

    @property
    def value(self) -> float:
        """
        Средняя ценность по всем посещениям ребер узла
        """
        visits = int(self.visit_counts.sum())

        return float(self.total_values.sum() / visits) if visits else 0.0

    @property
    def action_indices(self) -> np.ndarray:
        return np.array(
            [action_index(action, self.state.width) for action in self.actions],
            dtype=np.int64,
        )

    def expand(self, priors: np.ndarray):
        self.base_priors = np.asarray(priors, dtype=np.float64)
        self.priors = self.base_priors.copy()
        self.expanded = True

    def add_noise(
        self,
        generator: np.random.Generator,
        epsilon: float,
        alpha: float,
    ):
        """
        Смешивание априорных вероятностей с шумом Дирихле
        """
        if not self.actions or epsilon <= 0:
            self.priors = self.base_priors.copy()

            return

        noise = generator.dirichlet(np.full(len(self.actions), alpha))
        self.priors = (1 - epsilon) * self.base_priors + epsilon * noise

    def select(self, c_puct: float) -> int:
        """
        Ребро с максимумом Q + c * P * sqrt(N) / (1 + N(s, a)), при равенстве
        первое по порядку
        """
        scores = self.mean_values + (
            c_puct * self.priors * np.sqrt(self.visits) / (1 + self.visit_counts)
        )

        return int(np.argmax(scores))

    def backup(self, edge: int, value: float):
        self.visit_counts[edge] += 1
        self.total_values[edge] += value

    def as_dict(self, max_depth: int = 1) -> Dict[str, Any]:
        """
        Статистики поддерева для отладочного вывода
        """
        edges = []
        q_values = self.mean_values
        for edge, action in enumerate(self.actions):
            data = {
                'item': action.item_id,
                'x': action.x,
                'index': action_index(action, self.state.width),
                'visits': int(self.visit_counts[edge]),
                'q': float(q_values[edge]),
                'prior': float(self.priors[edge]),
            }

            child: Optional[SearchNode] = self.children.get(edge)
            if child is not None and max_depth > 1:
                data['child'] = child.as_dict(max_depth - 1)

            edges.append(data)

        return {
            'step': self.state.step,
            'h_tilde': self.state.h_tilde,
            'visits': self.visits,
            'value': self.value,
            'edges': edges,
        }
