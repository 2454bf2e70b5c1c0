import logging
import math
from pathlib import (
    Path,
)
from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Optional,
    Tuple,
    Union,
)

from ranked_packing.caches import (
    ComputedValueCache,
)
from ranked_packing.config import (
    SearchConfig,
)
from ranked_packing.consts import (
    DEFAULT_ORACLE_NODE_LIMIT,
    EVALUATION_STREAM_KEY,
    MANIFEST_FILE_NAME,
    ORACLE_TRACTABLE_MAX_HEIGHT,
    ORACLE_TRACTABLE_MAX_ITEMS,
    ORACLE_TRACTABLE_MAX_WIDTH,
)
from ranked_packing.decorators import (
    collect_errors,
)
from ranked_packing.exceptions import (
    OracleBudgetExceededError,
    OracleInfeasibleError,
)
from ranked_packing.functions import (
    GlobalHelperFunction,
)
from ranked_packing.helpers import (
    BaseRunnerHelper,
)
from ranked_packing.managers import (
    RunnerManager,
)
from ranked_packing.nnet.models import (
    PolicyValueModel,
)
from ranked_packing.packing.instances import (
    Instance,
    read_instance,
)
from ranked_packing.packing.solutions import (
    PackingSolution,
)
from ranked_packing.results import (
    BaseRunnableResult,
)
from ranked_packing.runners import (
    GlobalHelperRunner,
)
from ranked_packing.selfplay.runners import (
    initialize_torch_worker,
)
from ranked_packing.solvers import (
    get_solver,
)
from ranked_packing.solvers.oracle import (
    solve_exact,
)
from ranked_packing.utils import (
    read_json,
)
from ranked_packing.validators import (
    InstanceValidator,
)


logger = logging.getLogger(__name__)


def is_oracle_tractable(
    instance: Instance,
    height: int,
) -> bool:
    return (
        instance.n_items <= ORACLE_TRACTABLE_MAX_ITEMS and
        instance.w_star <= ORACLE_TRACTABLE_MAX_WIDTH and
        height <= ORACLE_TRACTABLE_MAX_HEIGHT
    )


def compute_oracle_height(key: Tuple[Instance, int]) -> Optional[int]:
    """
    Минимальная высота точного решателя или None, если она не найдена
    """
    instance, height = key

    try:
        return solve_exact(instance, h_cap=height, node_limit=DEFAULT_ORACLE_NODE_LIMIT).min_height
    except (OracleBudgetExceededError, OracleInfeasibleError) as exception:
        logger.warning('Экземпляр %s: точная высота не найдена (%s)', instance.name, exception)

        return None


def read_instances(path: Union[str, Path]) -> List[Instance]:
    """
    Экземпляры каталога в порядке манифеста, без манифеста - в порядке имен
    файлов. Путь к файлу дает один экземпляр
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(str(path))

    if path.is_file():
        return [read_instance(path)]

    manifest_path = path / MANIFEST_FILE_NAME
    if manifest_path.exists():
        files = [path / entry['file'] for entry in read_json(manifest_path)['instances']]
    else:
        files = sorted(
            file_path
            for file_path in path.glob('*.json')
            if file_path.name != MANIFEST_FILE_NAME
        )

    return [read_instance(file_path) for file_path in files]


class EvaluationRunnerHelper(BaseRunnerHelper):
    """
    Глобальный помощник оценки: решатель и кеш точных высот
    """

    def __init__(
        self,
        *args,
        solver_name: str = '',
        model: Optional[PolicyValueModel] = None,
        reward_threshold: float = 0.0,
        search_config: Optional[SearchConfig] = None,
        oracle: bool = False,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)

        self.solver = get_solver(
            solver_name,
            search_config=search_config,
            model=model,
            reward_threshold=reward_threshold,
        )
        self.oracle = oracle
        self.oracle_heights = ComputedValueCache(compute_oracle_height)


class SolveInstanceFunction(GlobalHelperFunction):
    """
    Упаковка одного экземпляра решателем глобального помощника со строкой
    отчета в качестве полезной нагрузки
    """

    def __init__(
        self,
        *args,
        instance: Instance = None,
        height: Optional[int] = None,
        label: str = '',
        **kwargs,
    ):
        super().__init__(*args, **kwargs)

        self.instance = instance
        self.height = height if height is not None else instance.virtual_height
        self.label = label or instance.name
        self.solution: Optional[PackingSolution] = None

    def _prepare_validator_class(self):
        return InstanceValidator

    def _oracle_height(self) -> Optional[int]:
        if not self.global_helper.oracle or not is_oracle_tractable(self.instance, self.height):
            return None

        return self.global_helper.oracle_heights.get((self.instance, self.height))

    @collect_errors
    def _prepare(self):
        solver = self.global_helper.solver
        solution = solver.solve(self.instance, height=self.height, generator=self.helper.generator)

        h_star = solution.state.h_star
        packed = solution.state.all_packed
        oracle_height = self._oracle_height()
        optimal_h_star = packed and solution.h_tilde == h_star

        if not packed:
            logger.warning('Экземпляр %s: решатель %s не упаковал все предметы', self.label, solver.name)

        self.result.payload = {
            'instance': self.label,
            'solver': solver.name,
            'n_items': self.instance.n_items,
            'w_star': self.instance.w_star,
            'height': self.height,
            'h_star': float(h_star),
            'h_tilde': solution.h_tilde,
            'reward': solution.reward,
            'utilization': solution.utilization if packed else math.nan,
            'status': solution.status,
            'dead': not packed,
            'optimal_h_star': bool(optimal_h_star),
            'oracle_height': oracle_height,
            'optimal': bool(
                packed and solution.h_tilde == oracle_height
                if oracle_height is not None else
                optimal_h_star
            ),
        }
        self.solution = solution


class EvaluationRunner(GlobalHelperRunner):
    """
    Пусковик оценки. Экземпляры выполняются в пуле при jobs > 1, строки
    отчета собираются в порядке экземпляров
    """

    def _prepare_global_helper_class(self):
        return EvaluationRunnerHelper

    def _prepare_worker_initializer(self):
        return initialize_torch_worker

    @property
    def rows(self) -> List[Dict[str, Any]]:
        return [
            runnable.result.payload
            for runnable in self.completed
            if runnable.result.has_not_errors
        ]


class EvaluationRunnerManager(RunnerManager):
    """
    Менеджер оценки решателя на наборе экземпляров
    """

    def _prepare_runner_class(self):
        return EvaluationRunner

    def _prepare_runner(
        self,
        *args,
        instances: Iterable[Instance] = (),
        height: Optional[int] = None,
        seed: int = 0,
        **kwargs,
    ):
        for index, instance in enumerate(instances):
            self._runner.enqueue(
                SolveInstanceFunction(
                    instance=instance,
                    height=height,
                    label=instance.name or str(index),
                    seed=seed,
                    keys=(EVALUATION_STREAM_KEY, index),
                )
            )

    def _prepare_runner_kwargs(self, *args, instances=(), height=None, seed=0, **kwargs):
        return kwargs


def evaluate(
    solver_name: str,
    instances: Iterable[Instance],
    height: Optional[int] = None,
    seed: int = 0,
    jobs: int = 1,
    model: Optional[PolicyValueModel] = None,
    reward_threshold: float = 0.0,
    search_config: Optional[SearchConfig] = None,
    oracle: bool = False,
) -> Tuple[BaseRunnableResult, List[Dict[str, Any]]]:
    """
    Жадная оценка решателя на наборе экземпляров. Возвращает результат
    пусковика и строки отчета в порядке экземпляров
    """
    manager = EvaluationRunnerManager()
    manager.run(
        instances=list(instances),
        height=height,
        seed=seed,
        jobs=jobs,
        solver_name=solver_name,
        model=model,
        reward_threshold=reward_threshold,
        search_config=search_config,
        oracle=oracle,
    )

    return manager.result, manager.runner.rows
