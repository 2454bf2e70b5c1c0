import logging
from abc import (
    ABCMeta,
    abstractmethod,
)
from dataclasses import (
    replace,
)
from pathlib import (
    Path,
)
from typing import (
    Optional,
    Tuple,
)

from django.conf import (
    settings,
)
from django.core.management.base import (
    BaseCommand,
    CommandError,
)

from ranked_packing.config import (
    RunConfig,
    load_run_config,
)
from ranked_packing.errors import (
    BaseError,
    InvalidArgumentsError,
    MissingFileError,
    error_from_exception,
)
from ranked_packing.exceptions import (
    RankedPackingException,
)
from ranked_packing.nnet.checkpoints import (
    load_checkpoint,
)
from ranked_packing.nnet.models import (
    PolicyValueModel,
)
from ranked_packing.results import (
    BaseRunnableResult,
)
from ranked_packing.strings import (
    INVALID_RANGE_ERROR,
    MISSING_FILE_ERROR,
)
from ranked_packing.utils import (
    atomic_write_text,
)


logger = logging.getLogger(__name__)

# Уровни журнала пакета по значению --verbosity
VERBOSITY_LOG_LEVELS = {
    0: logging.WARNING,
    2: logging.DEBUG,
    3: logging.DEBUG,
}


class BaseRankedPackingCommand(BaseCommand, metaclass=ABCMeta):
    """
    Базовая команда пакета.

    Исключения ядра и ошибки результатов запускаемых объектов переводятся в
    CommandError с кодом завершения ошибки.
    """

    def _add_config_arguments(self, parser):
        parser.add_argument(
            '--config',
            dest='config',
            action='store',
            type=str,
            help='JSON-файл конфигурации запуска (например, presets/desk.json)',
            default=None,
        )

        parser.add_argument(
            '--set',
            dest='overrides',
            action='append',
            type=str,
            help='Переопределение значения конфигурации вида раздел.ключ=значение, можно повторять',
            default=[],
        )

    def _add_jobs_argument(self, parser):
        parser.add_argument(
            '--jobs',
            dest='jobs',
            action='store',
            type=int,
            help='Количество процессов пула',
            default=None,
        )

    def _add_seed_argument(self, parser):
        parser.add_argument(
            '--seed',
            dest='seed',
            action='store',
            type=int,
            help='Начальное значение генераторов случайных чисел',
            default=0,
        )

    def _configure_logging(self, verbosity: int):
        """
        Уровень журнала пакета по --verbosity. При 1 используется уровень из
        настроек RANKED_PACKING
        """
        level = VERBOSITY_LOG_LEVELS.get(
            verbosity,
            getattr(settings, 'RANKED_PACKING', {}).get('LOG_LEVEL', 'INFO'),
        )
        logging.getLogger('ranked_packing').setLevel(level)

    def _prepare_jobs(self, jobs: Optional[int]) -> int:
        if jobs is None:
            jobs = getattr(settings, 'RANKED_PACKING', {}).get('DEFAULT_JOBS', 1)

        if jobs < 1:
            self._raise_error(InvalidArgumentsError(INVALID_RANGE_ERROR.format(reason=f'--jobs={jobs}')))

        return jobs

    def _prepare_run_config(self, options) -> RunConfig:
        config_path = options.get('config')
        if config_path is not None:
            self._check_exists(config_path)

        return load_run_config(config_path, options.get('overrides') or ())

    def _prepare_model(
        self,
        path: Optional[str],
    ) -> Tuple[Optional[PolicyValueModel], float]:
        """
        Модель контрольной точки и замороженный порог r_alpha из ее описания
        """
        if path is None:
            return None, 0.0

        self._check_exists(path)
        model, sidecar = load_checkpoint(path)

        return model, float(sidecar.get('reward_threshold', 0.0))

    def _prepare_search_config(self, config: RunConfig, simulations: Optional[int] = None):
        """
        Поиск при решении и оценке жадный: температура 0
        """
        search_config = replace(config.search, temperature=0.0)
        if simulations is not None:
            search_config = replace(search_config, simulations=simulations)

        search_config.validate()

        return search_config

    def _check_exists(self, path):
        if path is None or not Path(path).exists():
            self._raise_error(MissingFileError(MISSING_FILE_ERROR.format(path=path)))

    def _raise_error(self, error: BaseError):
        raise CommandError(error.as_str(), returncode=error.exit_code)

    def _raise_result_errors(self, result: BaseRunnableResult):
        """
        Завершение команды по первой ошибке результата
        """
        error = result.first_error()
        if error is not None:
            for other_error in result.errors[1:]:
                logger.debug('%s', other_error.as_str())

            self._raise_error(error)

    def _write_output(
        self,
        path: Optional[str],
        content: str,
    ):
        """
        Атомарная запись в файл или вывод в stdout, если путь не задан
        """
        if path:
            atomic_write_text(path, content)
            logger.info('Записан файл %s', path)
        else:
            self.stdout.write(content, ending='')

    @abstractmethod
    def _handle(self, *args, **options):
        """
        Действия команды
        """

    def handle(self, *args, **options):
        self._configure_logging(options.get('verbosity', 1))

        try:
            self._handle(*args, **options)
        except (RankedPackingException, FileNotFoundError) as exception:
            self._raise_error(error_from_exception(exception))
