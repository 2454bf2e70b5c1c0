from abc import (
    ABCMeta,
    abstractmethod,
)
from typing import (
    Optional,
)

import numpy as np

from ranked_packing.config import (
    SearchConfig,
)
from ranked_packing.consts import (
    DEFAULT_ORACLE_NODE_LIMIT,
)
from ranked_packing.enums import (
    SolverEnum,
)
from ranked_packing.nnet.models import (
    PolicyValueModel,
)
from ranked_packing.packing.instances import (
    Instance,
)
from ranked_packing.packing.solutions import (
    PackingSolution,
    solution_from_actions,
)
from ranked_packing.solvers.heuristics import (
    hvraa_solve,
    lego_solve,
    random_solve,
)
from ranked_packing.solvers.oracle import (
    solve_exact,
)


class BaseSolver(metaclass=ABCMeta):
    """
    Базовый класс решателя: упаковывает экземпляр целиком и возвращает
    решение с трассой
    """

    name: str = ''

    # Решателю требуется модель стратегии и ценности
    requires_model: bool = False

    def __init__(
        self,
        search_config: Optional[SearchConfig] = None,
        model: Optional[PolicyValueModel] = None,
        reward_threshold: float = 0.0,
        node_limit: int = DEFAULT_ORACLE_NODE_LIMIT,
    ):
        self.search_config = search_config if search_config is not None else SearchConfig(temperature=0.0)
        self.model = model
        self.reward_threshold = reward_threshold
        self.node_limit = node_limit

    def __repr__(self):
        return f'<{self.__class__.__name__} @name="{self.name}">'

    @abstractmethod
    def solve(
        self,
        instance: Instance,
        height: Optional[int] = None,
        generator: Optional[np.random.Generator] = None,
    ) -> PackingSolution:
        """
        Упаковка экземпляра
        """


class HVRAASolver(BaseSolver):
    name = SolverEnum.HVRAA

    def solve(self, instance, height=None, generator=None):
        return hvraa_solve(instance, height=height)


class LegoSolver(BaseSolver):
    name = SolverEnum.LEGO

    def solve(self, instance, height=None, generator=None):
        return lego_solve(instance, height=height)


class RandomSolver(BaseSolver):
    name = SolverEnum.RANDOM

    def solve(self, instance, height=None, generator=None):
        return random_solve(instance, seed=instance.seed, height=height, generator=generator)


class ExactSolver(BaseSolver):
    """
    Точный перебор с ограничением h_cap = H'
    """
    name = SolverEnum.EXACT

    def solve(self, instance, height=None, generator=None):
        h_cap = height if height is not None else instance.virtual_height
        result = solve_exact(instance, h_cap=h_cap, node_limit=self.node_limit)

        solution = solution_from_actions(
            instance,
            list(result.witness),
            solver=self.name,
            height=h_cap,
        )
        solution.extra['nodes_expanded'] = result.nodes_expanded

        return solution
