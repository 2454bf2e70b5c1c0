import logging
from abc import (
    ABCMeta,
)
from collections import (
    deque,
)
from concurrent.futures import (
    ProcessPoolExecutor,
)
from typing import (
    Callable,
    Deque,
    List,
    Optional,
    Union,
)

from ranked_packing.errors import (
    BaseError,
    RunFailedError,
)
from ranked_packing.general import (
    LazySavingArtifactRunnableObject,
    LazySavingRunnableObject,
    RunnableObject,
)
from ranked_packing.helpers import (
    BaseHelper,
    BaseRunnerHelper,
)
from ranked_packing.mixins import (
    GlobalHelperMixin,
    HelperMixin,
)
from ranked_packing.strings import (
    STRICT_SAVING_ERROR,
)


logger = logging.getLogger(__name__)


def _run_isolated(runnable: RunnableObject) -> RunnableObject:
    """
    Проверка и запуск объекта в процессе пула. Возвращается сам объект вместе
    с заполненным результатом.
    """
    runnable.before_validate()
    runnable.validate()
    runnable.after_validate()

    if runnable.result.has_not_errors:
        runnable.run()

    return runnable


class BaseRunner(
    HelperMixin,
    RunnableObject,
    metaclass=ABCMeta,
):
    """
    Базовый класс для создания пусковиков выполнения запускаемых объектов.

    При jobs > 1 объекты очереди выполняются в пуле процессов, результаты
    собираются в порядке постановки в очередь.
    """

    def __init__(self, *args, jobs: int = 1, **kwargs):
        super().__init__(*args, **kwargs)

        self._helper: Union[BaseHelper, BaseRunnerHelper] = self._prepare_helper(*args, **kwargs)
        self._queue: Deque[RunnableObject] = deque()
        self._jobs = max(1, int(jobs))

        # Объекты, отработавшие в последнем запуске, в порядке очереди
        self._completed: List[RunnableObject] = []

    def _prepare_helper_class(self):
        return BaseRunnerHelper

    @property
    def completed(self) -> List[RunnableObject]:
        return self._completed

    def _prepare_runnable_before_enqueue(
        self,
        runnable: RunnableObject,
    ):
        """
        Подготовка запускаемого объекта к работе.

        В данной точке расширения можно пропатчить объект через публичные методы
        """
        if isinstance(runnable, GlobalHelperMixin):
            runnable.set_global_helper(
                global_helper=self._helper,
            )

    def enqueue(
        self,
        runnable: RunnableObject,
        *args,
        **kwargs,
    ):
        """
        Добавление задачи на выполнение функции в очередь
        """
        self._prepare_runnable_before_enqueue(
            runnable=runnable,
        )

        self._queue.append(runnable)

    def _prepare_worker_initializer(self) -> Optional[Callable[[], None]]:
        """
        Точка расширения: функция инициализации процессов пула
        """
        return None

    def _execute_queue(self) -> List[RunnableObject]:
        """
        Выполнение всех объектов очереди последовательно или в пуле процессов
        """
        runnables = list(self._queue)
        self._queue.clear()

        if self._jobs == 1 or len(runnables) < 2:
            return [_run_isolated(runnable) for runnable in runnables]

        with ProcessPoolExecutor(
            max_workers=min(self._jobs, len(runnables)),
            initializer=self._prepare_worker_initializer(),
        ) as executor:
            return list(executor.map(_run_isolated, runnables))

    def _after_runnable_completed(
        self,
        runnable: RunnableObject,
    ):
        """
        Точка расширения после завершения очередного объекта
        """

    def run(self, *args, **kwargs):
        """
        Выполнение всех задач стоящих в очереди
        """
        self.before_validate()
        self.validate()
        self.after_validate()

        self._completed = []

        if self.result.has_not_errors:
            for runnable in self._execute_queue():
                self.result.append_entity(runnable.result)
                self._completed.append(runnable)

                self._after_runnable_completed(runnable)


class GlobalHelperRunner(
    GlobalHelperMixin,
    BaseRunner,
    metaclass=ABCMeta,
):
    """
    Базовый класс для создания пусковиков выполнения запускаемых объектов с
    глобальным помощником
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

        self._global_helper: BaseRunnerHelper = self._prepare_global_helper(*args, **kwargs)

    def _prepare_runnable_before_enqueue(
        self,
        runnable: RunnableObject,
    ):
        if isinstance(runnable, GlobalHelperMixin):
            runnable.set_global_helper(
                global_helper=self._global_helper,
            )


class LazySavingRunner(
    BaseRunner,
    LazySavingArtifactRunnableObject,
    metaclass=ABCMeta,
):
    """
    Абстрактный класс для создания классов пусковиков с отложенным сохранением
    артефактов из очередей на сохранение запускаемых объектов.

    Сохранение производится, когда все запускаемые объекты очереди отработают.
    """

    def _save_object(self, x):
        """
        Запуск сохранения у выполняемых объектов и собственных артефактов
        пусковика
        """
        if isinstance(x, LazySavingRunnableObject):
            x.do_save()
        else:
            super()._save_object(x)

    def _after_runnable_completed(
        self,
        runnable: RunnableObject,
    ):
        if (
            isinstance(runnable, LazySavingRunnableObject) and
            runnable.result.has_not_errors
        ):
            self._queue_to_save.append(runnable)


class LazyStrictSavingRunner(
    LazySavingRunner,
    metaclass=ABCMeta,
):
    """
    Абстрактный класс для создания классов пусковиков с отложенным сохранением
    объектов в строгом режиме.

    Если не все выполняемые объекты отработали корректно, то ни один не
    сохраняется.
    """

    def _get_strict_saving_error(self) -> BaseError:
        """
        Ошибка, которая должна быть возвращена при несоблюдении условий
        строгого режима
        """
        return RunFailedError(STRICT_SAVING_ERROR)

    def run(self, *args, **kwargs):
        """
        Выполнение всех задач стоящих в очереди
        """
        queue_length = len(self._queue)

        super().run(*args, **kwargs)

        saved_runnables = [
            x
            for x in self._queue_to_save
            if isinstance(x, LazySavingRunnableObject)
        ]

        if queue_length != len(saved_runnables) or self.result.has_errors:
            if self.result.has_not_errors:
                self.result.append_entity(
                    self._get_strict_saving_error()
                )

            self._queue_to_save.clear()


class LazyStrictSavingGlobalHelperRunner(
    GlobalHelperMixin,
    LazyStrictSavingRunner,
    metaclass=ABCMeta,
):
    """
    Абстрактный класс для создания классов пусковиков с отложенным сохранением
    объектов в строгом режиме c глобальным помощником
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

        self._global_helper: BaseRunnerHelper = self._prepare_global_helper(*args, **kwargs)

    def _prepare_runnable_before_enqueue(
        self,
        runnable: RunnableObject,
    ):
        if isinstance(runnable, GlobalHelperMixin):
            runnable.set_global_helper(
                global_helper=self._global_helper,
            )
