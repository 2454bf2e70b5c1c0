import logging
from pathlib import (
    Path,
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Union,
)

from ranked_packing.consts import (
    ARTIFACT_SCHEMA_VERSION,
    GENERATION_STREAM_KEY,
    INSTANCE_FILE_NAME_TEMPLATE,
    MANIFEST_FILE_NAME,
)
from ranked_packing.decorators import (
    collect_errors,
)
from ranked_packing.errors import (
    InvalidArgumentsError,
)
from ranked_packing.functions import (
    LazySavingGlobalHelperFunction,
)
from ranked_packing.general import (
    Artifact,
)
from ranked_packing.helpers import (
    BaseRunnerHelper,
)
from ranked_packing.managers import (
    LazySavingRunnerManager,
)
from ranked_packing.packing.instances import (
    dump_instance,
    generate_sliced_instance,
)
from ranked_packing.results import (
    BaseRunnableResult,
)
from ranked_packing.runners import (
    LazyStrictSavingGlobalHelperRunner,
)
from ranked_packing.strings import (
    INVALID_RANGE_ERROR,
)
from ranked_packing.utils import (
    to_json,
)
from ranked_packing.validators import (
    BaseValidator,
)


logger = logging.getLogger(__name__)


class GenerateRunnerHelper(BaseRunnerHelper):
    """
    Параметры генерации набора экземпляров
    """

    def __init__(
        self,
        *args,
        out_dir: Optional[Path] = None,
        n_items: int = 10,
        width: int = 15,
        h_min: int = 2,
        h_max: int = 15,
        height: Optional[int] = None,
        seed: int = 0,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)

        self.out_dir = Path(out_dir) if out_dir is not None else Path('.')
        self.n_items = n_items
        self.width = width
        self.h_min = h_min
        self.h_max = h_max
        self.height = height
        self.seed = seed


class GenerateParametersValidator(BaseValidator):
    """
    Проверка диапазонов генерации: каждый H* из [h_min, h_max] должен
    допускать нарезку на n_items предметов и помещаться под H'
    """

    def validate(self, runnable):
        helper = runnable.global_helper
        reasons = []

        if helper.width < 1 or helper.n_items < 1:
            reasons.append(f'width={helper.width}, n_items={helper.n_items}')

        if not 1 <= helper.h_min <= helper.h_max:
            reasons.append(f'h_min={helper.h_min}, h_max={helper.h_max}')
        elif helper.n_items > helper.width * helper.h_min:
            reasons.append(
                f'n_items={helper.n_items} > width * h_min={helper.width * helper.h_min}'
            )

        height = helper.height if helper.height is not None else helper.width
        if height < helper.h_max:
            reasons.append(f"H'={height} < h_max={helper.h_max}")

        for reason in reasons:
            runnable.result.append_entity(
                InvalidArgumentsError(INVALID_RANGE_ERROR.format(reason=reason))
            )


class GenerateInstanceFunction(LazySavingGlobalHelperFunction):
    """
    Генерация одного экземпляра гильотинными разрезами. H* равномерно из
    [h_min, h_max], seed экземпляра выводится из seed набора и индекса
    """

    def __init__(self, *args, index: int = 0, **kwargs):
        super().__init__(*args, **kwargs)

        self.index = index

    @collect_errors
    def _prepare(self):
        helper = self.global_helper
        generator = self.helper.generator

        h_star = int(generator.integers(helper.h_min, helper.h_max + 1))
        instance_seed = int(generator.integers(0, 2 ** 31 - 1))

        instance = generate_sliced_instance(
            w_star=helper.width,
            h_star=h_star,
            n_items=helper.n_items,
            seed=instance_seed,
            height=helper.height,
        )

        file_name = INSTANCE_FILE_NAME_TEMPLATE.format(index=self.index)
        self.do_on_save(Artifact.from_text(helper.out_dir / file_name, dump_instance(instance)))

        self.result.payload = {
            'file': file_name,
            'seed': instance_seed,
            'h_star': h_star,
        }


class GenerateRunner(LazyStrictSavingGlobalHelperRunner):
    """
    Пусковик генерации набора. Файлы экземпляров и манифест пишутся только
    если все экземпляры сгенерированы без ошибок
    """

    def _prepare_global_helper_class(self):
        return GenerateRunnerHelper

    def _prepare_validator_class(self):
        return GenerateParametersValidator

    @property
    def manifest(self) -> Dict[str, Any]:
        helper = self._global_helper
        entries: List[Dict[str, Any]] = [
            runnable.result.payload
            for runnable in self.completed
            if runnable.result.has_not_errors
        ]

        return {
            'schema_version': ARTIFACT_SCHEMA_VERSION,
            'seed': helper.seed,
            'count': len(entries),
            'n_items': helper.n_items,
            'width': helper.width,
            'height': helper.height,
            'h_min': helper.h_min,
            'h_max': helper.h_max,
            'instances': entries,
        }

    def run(self, *args, **kwargs):
        super().run(*args, **kwargs)

        if self.result.has_not_errors:
            self.do_on_save(
                Artifact.from_text(self._global_helper.out_dir / MANIFEST_FILE_NAME, to_json(self.manifest))
            )


class GenerateRunnerManager(LazySavingRunnerManager):
    """
    Менеджер генерации набора экземпляров в каталог
    """

    def _prepare_runner_class(self):
        return GenerateRunner

    def _prepare_runner_kwargs(self, *args, count: int = 0, **kwargs):
        return kwargs

    def _prepare_runner(self, *args, count: int = 0, seed: int = 0, **kwargs):
        for index in range(count):
            self._runner.enqueue(
                GenerateInstanceFunction(
                    index=index,
                    seed=seed,
                    keys=(GENERATION_STREAM_KEY, index),
                )
            )

    def _after_do_save(self, *args, count: int = 0, out_dir=None, **kwargs):
        if self._runner.result.has_not_errors:
            logger.info('Сгенерировано экземпляров: %d, каталог %s', count, out_dir)


def generate_instances(
    out_dir: Union[str, Path],
    count: int,
    n_items: int = 10,
    width: int = 15,
    h_min: int = 2,
    h_max: int = 15,
    seed: int = 0,
    height: Optional[int] = None,
    jobs: int = 1,
) -> BaseRunnableResult:
    """
    Генерация count экземпляров с манифестом, возвращает результат пусковика
    """
    manager = GenerateRunnerManager()
    manager.run(
        count=count,
        out_dir=Path(out_dir),
        n_items=n_items,
        width=width,
        h_min=h_min,
        h_max=h_max,
        height=height,
        seed=seed,
        jobs=jobs,
    )

    return manager.result
