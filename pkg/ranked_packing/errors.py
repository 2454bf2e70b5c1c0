from typing import (
    Dict,
    Type,
)

from ranked_packing.exceptions import (
    ConfigurationError,
    IncompatibleCheckpointError,
    InstanceError,
    NonFiniteLossError,
    RankedPackingException,
    UnknownSolverError,
)


class BaseError:
    """
    Базовый класс для создания возникающих ошибок для дальнейшей обработки и
    вывода.

    Каждая ошибка знает код завершения процесса, с которым команда должна
    завершиться при ее возникновении.
    """

    exit_code: int = 1

    def __init__(
        self,
        message: str = '',
    ):
        self._message = message

    def __repr__(self):
        return f'<{self.__class__.__name__} @message="{self._message}">'

    def as_str(self) -> str:
        return self._message


class InvalidArgumentsError(BaseError):
    """
    Недопустимые аргументы или диапазоны параметров
    """

    exit_code = 2


class MissingFileError(BaseError):
    """
    Отсутствует требуемый файл или каталог
    """

    exit_code = 3


class IncompatibleCheckpointVersionError(BaseError):
    """
    Несовместимая контрольная точка
    """

    exit_code = 4


class UnknownSolverNameError(BaseError):
    """
    Неизвестный решатель
    """

    exit_code = 5


class RunFailedError(BaseError):
    """
    Ошибка выполнения решателя или запуска
    """

    exit_code = 6


class NonFiniteLossRunError(BaseError):
    """
    Обучение прервано из-за неконечной функции потерь
    """

    exit_code = 7


class InvalidConfigError(BaseError):
    """
    Недопустимая конфигурация запуска
    """

    exit_code = 8


EXCEPTION_ERROR_MAP: Dict[Type[RankedPackingException], Type[BaseError]] = {
    InstanceError: InvalidArgumentsError,
    IncompatibleCheckpointError: IncompatibleCheckpointVersionError,
    UnknownSolverError: UnknownSolverNameError,
    NonFiniteLossError: NonFiniteLossRunError,
    ConfigurationError: InvalidConfigError,
}


def error_from_exception(exception: Exception) -> BaseError:
    """
    Преобразует исключение ядра в ошибку результата запускаемого объекта
    """
    for exception_class, error_class in EXCEPTION_ERROR_MAP.items():
        if isinstance(exception, exception_class):
            return error_class(str(exception))

    if isinstance(exception, FileNotFoundError):
        return MissingFileError(str(exception))

    return RunFailedError(str(exception))
