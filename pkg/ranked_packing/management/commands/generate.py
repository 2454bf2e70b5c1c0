from ranked_packing.errors import (
    InvalidArgumentsError,
)
from ranked_packing.generation import (
    generate_instances,
)
from ranked_packing.management.base import (
    BaseRankedPackingCommand,
)
from ranked_packing.strings import (
    INVALID_RANGE_ERROR,
)


class Command(BaseRankedPackingCommand):
    """
    Генерация набора экземпляров гильотинными разрезами
    """

    help = (
        """
        Генерирует --count экземпляров с --n-items предметами и бюджетом задержки --width. Высота H* каждого 
        экземпляра выбирается равномерно из [--h-min, --h-max]. В каталог --out пишутся файлы instance_NNNNN.json и 
        manifest.json.
        """
    )

    def add_arguments(self, parser):
        parser.add_argument(
            '--count',
            dest='count',
            action='store',
            type=int,
            help='Количество экземпляров',
            required=True,
        )

        parser.add_argument(
            '--n-items',
            dest='n_items',
            action='store',
            type=int,
            help='Количество предметов в экземпляре',
            default=10,
        )

        parser.add_argument(
            '--width',
            dest='width',
            action='store',
            type=int,
            help='Бюджет задержки W*',
            default=15,
        )

        parser.add_argument(
            '--h-min',
            dest='h_min',
            action='store',
            type=int,
            help='Нижняя граница H*',
            default=2,
        )

        parser.add_argument(
            '--h-max',
            dest='h_max',
            action='store',
            type=int,
            help='Верхняя граница H*',
            default=15,
        )

        parser.add_argument(
            '--height',
            dest='height',
            action='store',
            type=int,
            help='Виртуальная высота H\', по умолчанию равна W*',
            default=None,
        )

        parser.add_argument(
            '--out',
            dest='out',
            action='store',
            type=str,
            help='Каталог набора',
            required=True,
        )

        self._add_seed_argument(parser)
        self._add_jobs_argument(parser)

    def _handle(self, *args, **options):
        if options['count'] < 0:
            self._raise_error(
                InvalidArgumentsError(INVALID_RANGE_ERROR.format(reason=f'--count={options["count"]}'))
            )

        result = generate_instances(
            out_dir=options['out'],
            count=options['count'],
            n_items=options['n_items'],
            width=options['width'],
            h_min=options['h_min'],
            h_max=options['h_max'],
            seed=options['seed'],
            height=options['height'],
            jobs=self._prepare_jobs(options['jobs']),
        )

        self._raise_result_errors(result)
