import logging
from abc import (
    ABCMeta,
    abstractmethod,
)
from collections import (
    deque,
)
from dataclasses import (
    dataclass,
)
from pathlib import (
    Path,
)
from typing import (
    Deque,
    Type,
    Union,
)

from ranked_packing.mixins import (
    ValidatorMixin,
)
from ranked_packing.results import (
    BaseRunnableResult,
)
from ranked_packing.utils import (
    atomic_write_bytes,
)
from ranked_packing.validators import (
    BaseValidator,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Artifact:
    """
    Файл, запланированный к записи
    """
    path: Path
    content: bytes

    @classmethod
    def from_text(
        cls,
        path: Union[str, Path],
        text: str,
    ) -> 'Artifact':
        return cls(path=Path(path), content=text.encode('utf-8'))


class RunnableObject(
    ValidatorMixin,
    metaclass=ABCMeta,
):
    """
    Абстрактный класс для создания классов выполняемых объектов
    """

    def __init__(self, *args, **kwargs):
        self._validator: BaseValidator = self._prepare_validator(*args, **kwargs)
        self._result: BaseRunnableResult = self._prepare_result(*args, **kwargs)

    def _prepare_result_class(self) -> Type[BaseRunnableResult]:
        """
        Возвращает класс результата работы ранера
        """
        return BaseRunnableResult

    @property
    def result(self) -> BaseRunnableResult:
        return self._result

    def _prepare_result(self, *args, **kwargs):
        """
        Метод подготовки результата
        """
        result_class = self._prepare_result_class()

        if issubclass(result_class, BaseRunnableResult):
            result = result_class(*args, **kwargs)
        else:
            result = BaseRunnableResult(*args, **kwargs)

        return result

    @abstractmethod
    def run(self, *args, **kwargs):
        """
        Метод запуска выполняемого объекта
        """


class LazySavingRunnableObject(
    RunnableObject,
    metaclass=ABCMeta,
):
    """
    Абстрактный класс для создания классов с отложенным сохранением.

    Выполняемые объекты не пишут файлы по ходу работы, а складывают
    артефакты в очередь на сохранение. После выполнения всех действий
    вызывается метод do_save, который записывает все запланированные файлы.
    Так в каталоге результата не остается частично записанных артефактов,
    если работа завершилась ошибкой.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

        self._queue_to_save: Deque = deque()

    def do_on_save(self, object_):
        """
        Метод добавления артефакта или списка артефактов в очередь на
        сохранение
        """
        if isinstance(object_, (list, tuple)):
            for item in object_:
                self.do_on_save(item)
        else:
            self._queue_to_save.append(object_)

    @abstractmethod
    def _do_save_objects_queue(self):
        """
        Выполенение сохранения объектов из очереди
        """

    def do_save(self):
        """
        Выполнение действий сохранения объектов из очереди
        """
        self._do_save_objects_queue()


class LazySavingArtifactRunnableObject(
    LazySavingRunnableObject,
    metaclass=ABCMeta,
):
    """
    Абстрактный для создания классов исполняемых объектов с отложенным
    сохранением, использующих в качестве объектов артефакты-файлы. Каждый
    файл пишется атомарно: временный файл и переименование.
    """

    def _do_save_objects_queue(self):
        """
        Выполенение сохранения объектов из очереди
        """
        while self._queue_to_save:
            self._save_object(self._queue_to_save.popleft())

    def _save_object(self, artifact: Artifact):
        """
        Атомарная запись одного артефакта очереди
        """
        atomic_write_bytes(artifact.path, artifact.content)

        logger.debug('Записан артефакт %s (%d байт)', artifact.path, len(artifact.content))
