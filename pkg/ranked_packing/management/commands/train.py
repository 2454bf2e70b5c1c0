from ranked_packing.management.base import (
    BaseRankedPackingCommand,
)
from ranked_packing.selfplay.managers import (
    run_training,
)


class Command(BaseRankedPackingCommand):
    """
    Обучение сети самоигрой с ранжированной наградой
    """

    help = (
        """
        Запускает цикл самоигры по конфигурации --config с переопределениями --set. В каталог --out пишутся 
        config.json, metrics.csv и контрольные точки checkpoints/iter_NNNN.bin.
        """
    )

    def add_arguments(self, parser):
        self._add_config_arguments(parser)

        parser.add_argument(
            '--out',
            dest='out',
            action='store',
            type=str,
            help='Каталог запуска',
            required=True,
        )

        self._add_jobs_argument(parser)

    def _handle(self, *args, **options):
        config = self._prepare_run_config(options)
        jobs = self._prepare_jobs(options['jobs']) if options['jobs'] is not None else None

        result = run_training(config, options['out'], jobs=jobs)

        self._raise_result_errors(result)
