import logging
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple,
)

import pandas as pd

from ranked_packing.caches import (
    EntityCache,
)
from ranked_packing.config import (
    SearchConfig,
)
from ranked_packing.consts import (
    PEAK_HOUR,
    SCENARIO_STREAM_KEY,
)
from ranked_packing.decorators import (
    collect_errors,
)
from ranked_packing.exceptions import (
    ConfigurationError,
)
from ranked_packing.managers import (
    RunnerManager,
)
from ranked_packing.nnet.models import (
    PolicyValueModel,
)
from ranked_packing.packing.instances import (
    Instance,
)
from ranked_packing.presenters import (
    ScenarioReportPresenter,
)
from ranked_packing.runners import (
    BaseRunner,
)
from ranked_packing.scenario.requests import (
    SitesCache,
    sample_requests,
)
from ranked_packing.scenario.sites import (
    DUSite,
    Region,
)
from ranked_packing.selfplay.evaluation import (
    EvaluationRunner,
    SolveInstanceFunction,
)
from ranked_packing.strings import (
    UNKNOWN_DU_ERROR,
)
from ranked_packing.utils import (
    derive_seed,
)


logger = logging.getLogger(__name__)


def select_dus(
    region: Region,
    du_ids: Optional[Sequence[int]] = None,
) -> List[DUSite]:
    """
    DU региона по идентификаторам в заданном порядке, по умолчанию все
    """
    if not du_ids:
        return list(region.dus)

    cache = EntityCache(region.dus)
    dus = []
    for du_id in du_ids:
        du = cache.get_by_key(du_id)
        if du is None:
            raise ConfigurationError(UNKNOWN_DU_ERROR.format(du_id=du_id))

        dus.append(du)

    return dus


def sample_du_instances(
    region: Region,
    dus: Sequence[DUSite],
    hour: int,
    samples: int,
    seed: int,
) -> List[Tuple[DUSite, int, Instance]]:
    """
    Экземпляры запросов каждого DU. Набор одинаков для всех решателей
    """
    cache = SitesCache(region.sites)

    return [
        (
            du,
            sample,
            sample_requests(
                du,
                region.sites,
                hour,
                seed=derive_seed(seed, SCENARIO_STREAM_KEY, du.id, hour, sample),
                name=f'{du.label}_h{hour:02d}_s{sample:03d}',
                cache=cache,
            ),
        )
        for du in dus
        for sample in range(samples)
    ]


class DUSolveInstanceFunction(SolveInstanceFunction):
    """
    Упаковка запросов DU. Строка отчета дополняется меткой DU
    """

    def __init__(self, *args, du_label: str = '', **kwargs):
        super().__init__(*args, **kwargs)

        self.du_label = du_label

    @collect_errors
    def _prepare(self):
        super()._prepare()

        if self.result.payload is not None:
            self.result.payload['du'] = self.du_label


class ScenarioRunner(BaseRunner):
    """
    Пусковик сценария: по одному пусковику оценки на решатель
    """

    @property
    def rows(self) -> List[Dict[str, Any]]:
        return [
            row
            for runner in self.completed
            if isinstance(runner, EvaluationRunner)
            for row in runner.rows
        ]


class ScenarioRunnerManager(RunnerManager):
    """
    Менеджер сценария ORAN: выборки запросов выбранных DU в заданный час
    решаются каждым решателем из списка
    """

    def _prepare_runner_class(self):
        return ScenarioRunner

    def _prepare_runner_kwargs(self, *args, **kwargs):
        return {}

    def _before_create_runner(self, *args, hour: int = PEAK_HOUR, samples: int = 1, solvers=(), **kwargs):
        logger.info('Сценарий: час %d, выборок на DU %d, решатели %s', hour, samples, ', '.join(solvers))

    def _prepare_runner(
        self,
        *args,
        region: Region = None,
        du_ids: Optional[Sequence[int]] = None,
        hour: int = PEAK_HOUR,
        samples: int = 1,
        solvers: Sequence[str] = (),
        seed: int = 0,
        jobs: int = 1,
        model: Optional[PolicyValueModel] = None,
        reward_threshold: float = 0.0,
        search_config: Optional[SearchConfig] = None,
        **kwargs,
    ):
        instances = sample_du_instances(region, select_dus(region, du_ids), hour, samples, seed)

        for solver_name in solvers:
            runner = EvaluationRunner(
                jobs=jobs,
                solver_name=solver_name,
                model=model,
                reward_threshold=reward_threshold,
                search_config=search_config,
            )
            for du, sample, instance in instances:
                runner.enqueue(
                    DUSolveInstanceFunction(
                        instance=instance,
                        label=instance.name,
                        du_label=du.label,
                        seed=seed,
                        keys=(SCENARIO_STREAM_KEY, du.id, sample),
                    )
                )

            self._runner.enqueue(runner)

    @property
    def rows(self) -> List[Dict[str, Any]]:
        return self._runner.rows if self._runner else []

    def report(self) -> pd.DataFrame:
        """
        Таблица "строка на решатель, r_mean и u_mean на каждый DU"
        """
        return ScenarioReportPresenter(self.rows).represent()
