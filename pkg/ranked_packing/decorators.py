import logging
from functools import (
    wraps,
)

from ranked_packing.errors import (
    error_from_exception,
)
from ranked_packing.exceptions import (
    RankedPackingException,
)


logger = logging.getLogger(__name__)


def collect_errors(func):
    """
    Декоратор методов запускаемого объекта, переводящий исключения ядра и
    отсутствие файлов в ошибки результата.

    Запускаемые объекты не выпускают доменные исключения наружу, команда
    принимает решение о коде завершения по ошибкам результата.
    """

    @wraps(func)
    def wrapper(self, *args, **kwargs):
        try:
            return func(self, *args, **kwargs)
        except (RankedPackingException, FileNotFoundError) as exception:
            logger.debug('%s: %s', self.__class__.__name__, exception)
            self.result.append_entity(error_from_exception(exception))

    return wrapper
